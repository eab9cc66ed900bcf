//! Finite categories, Set-valued profunctors, ends and coends, and
//! coend-based profunctor composition.
//!
//! Enrichment is fixed to finite sets, which turns every coend into a
//! finite union-find problem: the coend of `F` over `C` is the disjoint
//! union of the diagonal sets `F(c, c)` modulo the relations generated by
//! `F(f, id)(x) ~ F(id, f)(x)`. Canonical class representatives are the
//! least members under the global element order, so quotients do not
//! depend on processing order.
//!
//! A profunctor `F: C -|-> D` is a functor `D^op x C -> Set`; the tables
//! store one finite labelled set per pair `(d, c)` together with the
//! contravariant action of `D` and the covariant action of `C`.

mod adjunction;

pub use adjunction::{check_adjunction, AdjunctionReport};

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProfError {
    /// The composition/identity tables do not define a category.
    InvalidCategory(&'static str),
    /// Object or morphism tables do not define a functor.
    InvalidFunctor(&'static str),
    /// Element or action tables do not define a profunctor.
    InvalidProfunctor(&'static str),
    /// Source/target categories do not line up.
    CategoryMismatch,
    /// A map between coend quotients failed to descend to classes.
    NotWellDefined(&'static str),
}

impl fmt::Display for ProfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProfError::InvalidCategory(s) => write!(f, "invalid category: {s}"),
            ProfError::InvalidFunctor(s) => write!(f, "invalid functor: {s}"),
            ProfError::InvalidProfunctor(s) => write!(f, "invalid profunctor: {s}"),
            ProfError::CategoryMismatch => write!(f, "categories do not match"),
            ProfError::NotWellDefined(s) => write!(f, "map does not descend to classes: {s}"),
        }
    }
}

/// A morphism handle: source object, target object, position in the
/// hom-set `hom(src, tgt)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Mor {
    pub src: usize,
    pub tgt: usize,
    pub idx: usize,
}

/// A finite category given by labelled objects, labelled hom-sets, an
/// identity selection and a full composition table. Associativity and the
/// unit laws are checked exhaustively at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinCategory {
    objects: Vec<String>,
    homs: Vec<Vec<Vec<String>>>,
    ids: Vec<usize>,
    /// `comp[a][b][c][f][g]` = index of `g . f` in `hom(a, c)`,
    /// for `f: a -> b`, `g: b -> c`.
    comp: Vec<Vec<Vec<Vec<Vec<usize>>>>>,
}

impl FinCategory {
    pub fn new(
        objects: Vec<String>,
        homs: Vec<Vec<Vec<String>>>,
        ids: Vec<usize>,
        comp: Vec<Vec<Vec<Vec<Vec<usize>>>>>,
    ) -> Result<Self, ProfError> {
        let n = objects.len();
        if homs.len() != n || ids.len() != n || comp.len() != n {
            return Err(ProfError::InvalidCategory("table sizes"));
        }
        for a in 0..n {
            if homs[a].len() != n || comp[a].len() != n {
                return Err(ProfError::InvalidCategory("table sizes"));
            }
            if ids[a] >= homs[a][a].len() {
                return Err(ProfError::InvalidCategory("identity index out of range"));
            }
            for b in 0..n {
                if comp[a][b].len() != n {
                    return Err(ProfError::InvalidCategory("table sizes"));
                }
                for c in 0..n {
                    if comp[a][b][c].len() != homs[a][b].len() {
                        return Err(ProfError::InvalidCategory("composition table shape"));
                    }
                    for row in &comp[a][b][c] {
                        if row.len() != homs[b][c].len() {
                            return Err(ProfError::InvalidCategory("composition table shape"));
                        }
                        if row.iter().any(|&k| k >= homs[a][c].len()) {
                            return Err(ProfError::InvalidCategory("composition index out of range"));
                        }
                    }
                }
            }
        }
        let cat = FinCategory { objects, homs, ids, comp };
        // Unit laws.
        for m in cat.morphisms() {
            if cat.compose(cat.id(m.src), m) != m || cat.compose(m, cat.id(m.tgt)) != m {
                return Err(ProfError::InvalidCategory("identity law fails"));
            }
        }
        // Associativity, exhaustively.
        for f in cat.morphisms() {
            for g in cat.morphisms_from(f.tgt) {
                for h in cat.morphisms_from(g.tgt) {
                    let lhs = cat.compose(cat.compose(f, g), h);
                    let rhs = cat.compose(f, cat.compose(g, h));
                    if lhs != rhs {
                        return Err(ProfError::InvalidCategory("associativity fails"));
                    }
                }
            }
        }
        Ok(cat)
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn object_label(&self, a: usize) -> &str {
        &self.objects[a]
    }

    pub fn hom(&self, a: usize, b: usize) -> &[String] {
        &self.homs[a][b]
    }

    pub fn mor_label(&self, m: Mor) -> &str {
        &self.homs[m.src][m.tgt][m.idx]
    }

    pub fn id(&self, a: usize) -> Mor {
        Mor { src: a, tgt: a, idx: self.ids[a] }
    }

    /// `g . f` for `f: a -> b`, `g: b -> c`.
    pub fn compose(&self, f: Mor, g: Mor) -> Mor {
        debug_assert_eq!(f.tgt, g.src, "composition endpoint mismatch");
        Mor { src: f.src, tgt: g.tgt, idx: self.comp[f.src][f.tgt][g.tgt][f.idx][g.idx] }
    }

    /// All morphisms in (src, tgt, idx) order.
    pub fn morphisms(&self) -> Vec<Mor> {
        let mut out = Vec::new();
        for src in 0..self.object_count() {
            for tgt in 0..self.object_count() {
                for idx in 0..self.homs[src][tgt].len() {
                    out.push(Mor { src, tgt, idx });
                }
            }
        }
        out
    }

    fn morphisms_from(&self, src: usize) -> Vec<Mor> {
        let mut out = Vec::new();
        for tgt in 0..self.object_count() {
            for idx in 0..self.homs[src][tgt].len() {
                out.push(Mor { src, tgt, idx });
            }
        }
        out
    }

    /// The one-object category of a finite abelian group; morphism labels
    /// are the residue vectors.
    pub fn one_object_group(group: &crate::groups::FinAbGroup) -> Self {
        let elements = group.all_elements();
        let labels: Vec<String> =
            elements.iter().map(|e| format!("{:?}", e.residues())).collect();
        let zero_idx = group.index_of(&group.zero());
        let mut table = Vec::new();
        for f in 0..elements.len() {
            let mut row = Vec::new();
            for g in 0..elements.len() {
                row.push(group.index_of(&group.add(&elements[f], &elements[g])));
            }
            table.push(row);
        }
        FinCategory::new(
            alloc::vec![String::from("*")],
            alloc::vec![alloc::vec![labels]],
            alloc::vec![zero_idx],
            alloc::vec![alloc::vec![alloc::vec![table]]],
        )
        .expect("group table is a category")
    }

    /// The poset chain `0 -> 1 -> ... -> n-1`.
    pub fn poset_chain(n: usize) -> Self {
        let objects: Vec<String> = (0..n).map(|i| format!("{i}")).collect();
        let mut homs = Vec::new();
        for a in 0..n {
            let mut row = Vec::new();
            for b in 0..n {
                row.push(if a <= b { alloc::vec![format!("{a}<={b}")] } else { Vec::new() });
            }
            homs.push(row);
        }
        let ids = alloc::vec![0; n];
        let mut comp = Vec::new();
        for a in 0..n {
            let mut ta = Vec::new();
            for b in 0..n {
                let mut tb = Vec::new();
                for c in 0..n {
                    let rows = if a <= b && b <= c {
                        alloc::vec![alloc::vec![0usize]]
                    } else {
                        alloc::vec![Vec::new(); homs[a][b].len()]
                    };
                    tb.push(rows);
                }
                ta.push(tb);
            }
            comp.push(ta);
        }
        FinCategory::new(objects, homs, ids, comp).expect("chain is a category")
    }

    /// The discrete category on `n` objects.
    pub fn discrete(n: usize) -> Self {
        let objects: Vec<String> = (0..n).map(|i| format!("{i}")).collect();
        let mut homs = Vec::new();
        for a in 0..n {
            let mut row = Vec::new();
            for b in 0..n {
                row.push(if a == b { alloc::vec![String::from("id")] } else { Vec::new() });
            }
            homs.push(row);
        }
        let mut comp = Vec::new();
        for a in 0..n {
            let mut ta = Vec::new();
            for b in 0..n {
                let mut tb = Vec::new();
                for c in 0..n {
                    let rows = if a == b && b == c {
                        alloc::vec![alloc::vec![0usize]]
                    } else {
                        alloc::vec![Vec::new(); homs[a][b].len()]
                    };
                    tb.push(rows);
                }
                ta.push(tb);
            }
            comp.push(ta);
        }
        FinCategory::new(objects, homs, alloc::vec![0; n], comp).expect("discrete category")
    }

    /// Three objects `a, b, c` with `Z2` endomorphisms on `a` and `b`, two
    /// parallel arrows `a -> b` swapped by them, and a terminal-ish `c`.
    pub fn three_object_endo() -> Self {
        let objects = alloc::vec![String::from("a"), String::from("b"), String::from("c")];
        let e = |s: &str| String::from(s);
        let homs = alloc::vec![
            alloc::vec![
                alloc::vec![e("id_a"), e("s")],
                alloc::vec![e("u"), e("u'")],
                alloc::vec![e("w")],
            ],
            alloc::vec![Vec::new(), alloc::vec![e("id_b"), e("t")], alloc::vec![e("v")]],
            alloc::vec![Vec::new(), Vec::new(), alloc::vec![e("id_c")]],
        ];
        let ids = alloc::vec![0, 0, 0];
        // hom(a,a) = {id, s}, s^2 = id; hom(b,b) = {id, t}, t^2 = id;
        // u . s = u', u' . s = u; t . u = u', t . u' = u; v . t = v;
        // w . s = w; v . u = v . u' = w.
        let n = 3usize;
        let mut comp = alloc::vec![alloc::vec![alloc::vec![Vec::<Vec<usize>>::new(); n]; n]; n];
        #[allow(clippy::needless_range_loop)]
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    comp[a][b][c] =
                        alloc::vec![alloc::vec![0usize; homs[b][c].len()]; homs[a][b].len()];
                }
            }
        }
        let set = |comp: &mut Vec<Vec<Vec<Vec<Vec<usize>>>>>, a: usize, b: usize, c: usize, table: Vec<Vec<usize>>| {
            comp[a][b][c] = table;
        };
        // (a,a,a): f in {id,s}, g in {id,s} -> g.f
        set(&mut comp, 0, 0, 0, alloc::vec![alloc::vec![0, 1], alloc::vec![1, 0]]);
        // (a,a,b): f in {id,s}, g in {u,u'}
        set(&mut comp, 0, 0, 1, alloc::vec![alloc::vec![0, 1], alloc::vec![1, 0]]);
        // (a,a,c): f in {id,s}, g in {w}
        set(&mut comp, 0, 0, 2, alloc::vec![alloc::vec![0], alloc::vec![0]]);
        // (a,b,b): f in {u,u'}, g in {id,t}
        set(&mut comp, 0, 1, 1, alloc::vec![alloc::vec![0, 1], alloc::vec![1, 0]]);
        // (a,b,c): f in {u,u'}, g in {v}
        set(&mut comp, 0, 1, 2, alloc::vec![alloc::vec![0], alloc::vec![0]]);
        // (a,c,c): f in {w}, g in {id_c}
        set(&mut comp, 0, 2, 2, alloc::vec![alloc::vec![0]]);
        // (b,b,b): f in {id,t}, g in {id,t}
        set(&mut comp, 1, 1, 1, alloc::vec![alloc::vec![0, 1], alloc::vec![1, 0]]);
        // (b,b,c): f in {id,t}, g in {v}
        set(&mut comp, 1, 1, 2, alloc::vec![alloc::vec![0], alloc::vec![0]]);
        // (b,c,c): f in {v}, g in {id_c}
        set(&mut comp, 1, 2, 2, alloc::vec![alloc::vec![0]]);
        // (c,c,c)
        set(&mut comp, 2, 2, 2, alloc::vec![alloc::vec![0]]);
        FinCategory::new(objects, homs, ids, comp).expect("three-object category")
    }
}

/// A functor between finite categories, given by object and morphism
/// tables; functoriality is checked exhaustively at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinFunctor {
    obj_map: Vec<usize>,
    /// `mor_map[a][b][f]` = index of the image in `hom(F a, F b)`.
    mor_map: Vec<Vec<Vec<usize>>>,
}

impl FinFunctor {
    pub fn new(
        source: &FinCategory,
        target: &FinCategory,
        obj_map: Vec<usize>,
        mor_map: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self, ProfError> {
        let n = source.object_count();
        if obj_map.len() != n || mor_map.len() != n {
            return Err(ProfError::InvalidFunctor("table sizes"));
        }
        if obj_map.iter().any(|&o| o >= target.object_count()) {
            return Err(ProfError::InvalidFunctor("object index out of range"));
        }
        for a in 0..n {
            if mor_map[a].len() != n {
                return Err(ProfError::InvalidFunctor("table sizes"));
            }
            for b in 0..n {
                if mor_map[a][b].len() != source.hom(a, b).len() {
                    return Err(ProfError::InvalidFunctor("morphism table shape"));
                }
                for &m in &mor_map[a][b] {
                    if m >= target.hom(obj_map[a], obj_map[b]).len() {
                        return Err(ProfError::InvalidFunctor("morphism index out of range"));
                    }
                }
            }
        }
        let f = FinFunctor { obj_map, mor_map };
        for a in 0..n {
            if f.apply_mor(source.id(a)) != target.id(f.obj_map[a]) {
                return Err(ProfError::InvalidFunctor("does not preserve identities"));
            }
        }
        for m1 in source.morphisms() {
            for m2 in source.morphisms_from(m1.tgt) {
                let lhs = f.apply_mor(source.compose(m1, m2));
                let rhs = target.compose(f.apply_mor(m1), f.apply_mor(m2));
                if lhs != rhs {
                    return Err(ProfError::InvalidFunctor("does not preserve composition"));
                }
            }
        }
        Ok(f)
    }

    pub fn identity(cat: &FinCategory) -> Self {
        let n = cat.object_count();
        let obj_map = (0..n).collect();
        let mor_map = (0..n)
            .map(|a| (0..n).map(|b| (0..cat.hom(a, b).len()).collect()).collect())
            .collect();
        FinFunctor { obj_map, mor_map }
    }

    pub fn apply_obj(&self, a: usize) -> usize {
        self.obj_map[a]
    }

    pub fn apply_mor(&self, m: Mor) -> Mor {
        Mor {
            src: self.obj_map[m.src],
            tgt: self.obj_map[m.tgt],
            idx: self.mor_map[m.src][m.tgt][m.idx],
        }
    }
}

/// A Set-valued profunctor `F: C -|-> D`, tabulated as `elems[d][c]` with
/// the contravariant `D`-action (`lact`) and the covariant `C`-action
/// (`ract`). Functoriality and commutation of the actions are checked
/// exhaustively at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SetProfunctor {
    source: FinCategory,
    target: FinCategory,
    elems: Vec<Vec<Vec<String>>>,
    /// `lact[m][c]`: for a target morphism `m: d' -> d`, the map
    /// `F(d, c) -> F(d', c)`.
    lact: Vec<Vec<Vec<usize>>>,
    /// `ract[m][d]`: for a source morphism `m: c -> c'`, the map
    /// `F(d, c) -> F(d, c')`.
    ract: Vec<Vec<Vec<usize>>>,
}

impl SetProfunctor {
    pub fn new(
        source: FinCategory,
        target: FinCategory,
        elems: Vec<Vec<Vec<String>>>,
        lact: Vec<Vec<Vec<usize>>>,
        ract: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self, ProfError> {
        let p = SetProfunctor { source, target, elems, lact, ract };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<(), ProfError> {
        let (nc, nd) = (self.source.object_count(), self.target.object_count());
        if self.elems.len() != nd {
            return Err(ProfError::InvalidProfunctor("element table size"));
        }
        for row in &self.elems {
            if row.len() != nc {
                return Err(ProfError::InvalidProfunctor("element table size"));
            }
        }
        let tmors = self.target.morphisms();
        let smors = self.source.morphisms();
        if self.lact.len() != tmors.len() || self.ract.len() != smors.len() {
            return Err(ProfError::InvalidProfunctor("action table size"));
        }
        for (mi, m) in tmors.iter().enumerate() {
            if self.lact[mi].len() != nc {
                return Err(ProfError::InvalidProfunctor("action table size"));
            }
            for c in 0..nc {
                let map = &self.lact[mi][c];
                if map.len() != self.elems[m.tgt][c].len()
                    || map.iter().any(|&x| x >= self.elems[m.src][c].len())
                {
                    return Err(ProfError::InvalidProfunctor("left action shape"));
                }
            }
        }
        for (mi, m) in smors.iter().enumerate() {
            if self.ract[mi].len() != nd {
                return Err(ProfError::InvalidProfunctor("action table size"));
            }
            for d in 0..nd {
                let map = &self.ract[mi][d];
                if map.len() != self.elems[d][m.src].len()
                    || map.iter().any(|&x| x >= self.elems[d][m.tgt].len())
                {
                    return Err(ProfError::InvalidProfunctor("right action shape"));
                }
            }
        }
        // Identities act as identities.
        for d in 0..nd {
            let mi = self.target_mor_index(self.target.id(d));
            for c in 0..nc {
                if self.lact[mi][c].iter().enumerate().any(|(i, &x)| i != x) {
                    return Err(ProfError::InvalidProfunctor("left identity action"));
                }
            }
        }
        for c in 0..nc {
            let mi = self.source_mor_index(self.source.id(c));
            for d in 0..nd {
                if self.ract[mi][d].iter().enumerate().any(|(i, &x)| i != x) {
                    return Err(ProfError::InvalidProfunctor("right identity action"));
                }
            }
        }
        // Contravariant functoriality: F(m2 . m1) = F(m1) . F(m2).
        for m1 in &tmors {
            for m2 in self.target.morphisms_from(m1.tgt) {
                let composite = self.target.compose(*m1, m2);
                for c in 0..nc {
                    for x in 0..self.elems[m2.tgt][c].len() {
                        let direct = self.lact_apply(composite, c, x);
                        let stepped = self.lact_apply(*m1, c, self.lact_apply(m2, c, x));
                        if direct != stepped {
                            return Err(ProfError::InvalidProfunctor("left action functoriality"));
                        }
                    }
                }
            }
        }
        // Covariant functoriality: F(m2 . m1) = F(m2) . F(m1).
        for m1 in &smors {
            for m2 in self.source.morphisms_from(m1.tgt) {
                let composite = self.source.compose(*m1, m2);
                for d in 0..nd {
                    for x in 0..self.elems[d][m1.src].len() {
                        let direct = self.ract_apply(composite, d, x);
                        let stepped = self.ract_apply(m2, d, self.ract_apply(*m1, d, x));
                        if direct != stepped {
                            return Err(ProfError::InvalidProfunctor("right action functoriality"));
                        }
                    }
                }
            }
        }
        // The actions commute.
        for m in &tmors {
            for f in &smors {
                for x in 0..self.elems[m.tgt][f.src].len() {
                    let a = self.ract_apply(*f, m.src, self.lact_apply(*m, f.src, x));
                    let b = self.lact_apply(*m, f.tgt, self.ract_apply(*f, m.tgt, x));
                    if a != b {
                        return Err(ProfError::InvalidProfunctor("actions do not commute"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &FinCategory {
        &self.source
    }

    pub fn target(&self) -> &FinCategory {
        &self.target
    }

    pub fn elems(&self, d: usize, c: usize) -> &[String] {
        &self.elems[d][c]
    }

    fn target_mor_index(&self, m: Mor) -> usize {
        let mut idx = 0;
        for src in 0..m.src {
            for tgt in 0..self.target.object_count() {
                idx += self.target.hom(src, tgt).len();
            }
        }
        for tgt in 0..m.tgt {
            idx += self.target.hom(m.src, tgt).len();
        }
        idx + m.idx
    }

    fn source_mor_index(&self, m: Mor) -> usize {
        let mut idx = 0;
        for src in 0..m.src {
            for tgt in 0..self.source.object_count() {
                idx += self.source.hom(src, tgt).len();
            }
        }
        for tgt in 0..m.tgt {
            idx += self.source.hom(m.src, tgt).len();
        }
        idx + m.idx
    }

    /// `F(m, c): F(m.tgt, c) -> F(m.src, c)` for a target morphism `m`.
    pub fn lact_apply(&self, m: Mor, c: usize, x: usize) -> usize {
        self.lact[self.target_mor_index(m)][c][x]
    }

    /// `F(d, m): F(d, m.src) -> F(d, m.tgt)` for a source morphism `m`.
    pub fn ract_apply(&self, m: Mor, d: usize, x: usize) -> usize {
        self.ract[self.source_mor_index(m)][d][x]
    }

    /// The identity profunctor `Id(d, c) = Hom(d, c)` with composition
    /// actions.
    pub fn identity_prof(cat: &FinCategory) -> Self {
        let n = cat.object_count();
        let mut elems = Vec::with_capacity(n);
        for d in 0..n {
            elems.push((0..n).map(|c| cat.hom(d, c).to_vec()).collect());
        }
        let mut lact = Vec::new();
        for m in cat.morphisms() {
            // m: d' -> d, precomposition Hom(d, c) -> Hom(d', c)
            let mut per_c = Vec::with_capacity(n);
            for c in 0..n {
                per_c.push(
                    (0..cat.hom(m.tgt, c).len())
                        .map(|idx| cat.compose(m, Mor { src: m.tgt, tgt: c, idx }).idx)
                        .collect(),
                );
            }
            lact.push(per_c);
        }
        let mut ract = Vec::new();
        for m in cat.morphisms() {
            // m: c -> c', postcomposition Hom(d, c) -> Hom(d, c')
            let mut per_d = Vec::with_capacity(n);
            for d in 0..n {
                per_d.push(
                    (0..cat.hom(d, m.src).len())
                        .map(|idx| cat.compose(Mor { src: d, tgt: m.src, idx }, m).idx)
                        .collect(),
                );
            }
            ract.push(per_d);
        }
        SetProfunctor::new(cat.clone(), cat.clone(), elems, lact, ract)
            .expect("identity profunctor is functorial")
    }

    /// `F_*(d, c) = Hom_D(d, F c)`: precomposition on the left,
    /// postcomposition with `F(f)` on the right.
    pub fn representable_lower(
        source: &FinCategory,
        target: &FinCategory,
        f0: &FinFunctor,
    ) -> Self {
        let (nc, nd) = (source.object_count(), target.object_count());
        let mut elems = Vec::with_capacity(nd);
        for d in 0..nd {
            elems.push((0..nc).map(|c| target.hom(d, f0.apply_obj(c)).to_vec()).collect());
        }
        let mut lact = Vec::new();
        for m in target.morphisms() {
            let mut per_c = Vec::with_capacity(nc);
            for c in 0..nc {
                let fc = f0.apply_obj(c);
                per_c.push(
                    (0..target.hom(m.tgt, fc).len())
                        .map(|idx| target.compose(m, Mor { src: m.tgt, tgt: fc, idx }).idx)
                        .collect(),
                );
            }
            lact.push(per_c);
        }
        let mut ract = Vec::new();
        for m in source.morphisms() {
            let fm = f0.apply_mor(m);
            let mut per_d = Vec::with_capacity(nd);
            for d in 0..nd {
                per_d.push(
                    (0..target.hom(d, fm.src).len())
                        .map(|idx| target.compose(Mor { src: d, tgt: fm.src, idx }, fm).idx)
                        .collect(),
                );
            }
            ract.push(per_d);
        }
        SetProfunctor::new(source.clone(), target.clone(), elems, lact, ract)
            .expect("lower representable is functorial")
    }

    /// `F^*(c, d) = Hom_D(F c, d)`: a profunctor `D -|-> C`, with
    /// precomposition by `F(f)` as the contravariant `C`-action and
    /// postcomposition as the covariant `D`-action.
    pub fn representable_upper(
        source: &FinCategory,
        target: &FinCategory,
        f0: &FinFunctor,
    ) -> Self {
        let (nc, nd) = (source.object_count(), target.object_count());
        // As a profunctor D -|-> C: elems[c][d] = Hom_D(F c, d).
        let mut elems = Vec::with_capacity(nc);
        for c in 0..nc {
            elems.push((0..nd).map(|d| target.hom(f0.apply_obj(c), d).to_vec()).collect());
        }
        let mut lact = Vec::new();
        for m in source.morphisms() {
            // m: c' -> c in C, precompose F(m): Hom(F c, d) -> Hom(F c', d)
            let fm = f0.apply_mor(m);
            let mut per_d = Vec::with_capacity(nd);
            for d in 0..nd {
                per_d.push(
                    (0..target.hom(fm.tgt, d).len())
                        .map(|idx| target.compose(fm, Mor { src: fm.tgt, tgt: d, idx }).idx)
                        .collect(),
                );
            }
            lact.push(per_d);
        }
        let mut ract = Vec::new();
        for m in target.morphisms() {
            // m: d -> d' in D, postcompose: Hom(F c, d) -> Hom(F c, d')
            let mut per_c = Vec::with_capacity(nc);
            for c in 0..nc {
                let fc = f0.apply_obj(c);
                per_c.push(
                    (0..target.hom(fc, m.src).len())
                        .map(|idx| target.compose(Mor { src: fc, tgt: m.src, idx }, m).idx)
                        .collect(),
                );
            }
            ract.push(per_c);
        }
        SetProfunctor::new(target.clone(), source.clone(), elems, lact, ract)
            .expect("upper representable is functorial")
    }
}

/// The coend of a profunctor `C -|-> C`: the disjoint union of the
/// diagonal sets quotiented by `F(f, id)(x) ~ F(id, f)(x)`, computed by
/// union-find. Classes are sorted by their least member `(c, elem)`, and
/// the least member is the canonical representative, so the output is
/// independent of processing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coend {
    /// Classes as sorted member lists `(object, element)`.
    pub classes: Vec<Vec<(usize, usize)>>,
    /// Structure maps `w_c`: `class_of[c][x]` is the class of `x` in
    /// `F(c, c)`.
    pub class_of: Vec<Vec<usize>>,
}

pub fn coend(f: &SetProfunctor) -> Result<Coend, ProfError> {
    if f.source != f.target {
        return Err(ProfError::CategoryMismatch);
    }
    Ok(coend_with_order(f, false))
}

/// Determinism probe for the union-find quotient: forward and reversed
/// relation processing must give identical canonical output.
pub fn coend_order_independent(f: &SetProfunctor) -> Result<bool, ProfError> {
    if f.source != f.target {
        return Err(ProfError::CategoryMismatch);
    }
    Ok(coend_with_order(f, false) == coend_with_order(f, true))
}

fn coend_with_order(f: &SetProfunctor, reversed: bool) -> Coend {
    let n = f.source.object_count();
    let mut offset = alloc::vec![0usize; n + 1];
    for c in 0..n {
        offset[c + 1] = offset[c] + f.elems[c][c].len();
    }
    let total = offset[n];
    let mut uf = UnionFind::new(total);
    let mut relations = Vec::new();
    for m in f.source.morphisms() {
        // x in F(m.tgt, m.src): relate F(m, id)(x) in F(m.src, m.src)
        // with F(id, m)(x) in F(m.tgt, m.tgt).
        for x in 0..f.elems[m.tgt][m.src].len() {
            let left = offset[m.src] + f.lact_apply(m, m.src, x);
            let right = offset[m.tgt] + f.ract_apply(m, m.tgt, x);
            relations.push((left, right));
        }
    }
    if reversed {
        relations.reverse();
    }
    for (a, b) in relations {
        uf.union(a, b);
    }
    // Canonicalize: classes keyed by least member.
    let mut class_ids: Vec<usize> = Vec::new();
    let mut members: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut root_to_class: Vec<Option<usize>> = alloc::vec![None; total];
    for global in 0..total {
        let root = uf.find(global);
        if root_to_class[root].is_none() {
            root_to_class[root] = Some(class_ids.len());
            class_ids.push(root);
            members.push(Vec::new());
        }
        let c = offset.partition_point(|&o| o <= global) - 1;
        members[root_to_class[root].unwrap()].push((c, global - offset[c]));
    }
    let mut class_of = alloc::vec![Vec::new(); n];
    for c in 0..n {
        class_of[c] = (0..f.elems[c][c].len())
            .map(|x| root_to_class[uf.find(offset[c] + x)].unwrap())
            .collect();
    }
    Coend { classes: members, class_of }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Union keeping the smaller index as root, so representatives are
    /// canonical regardless of processing order.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// The end of a profunctor `C -|-> C`: all families `(x_c in F(c, c))`
/// with `F(f, d)(x_d) = F(c, f)(x_c)` for every `f: c -> d`, by exhaustive
/// enumeration.
pub fn end(f: &SetProfunctor) -> Result<Vec<Vec<usize>>, ProfError> {
    if f.source != f.target {
        return Err(ProfError::CategoryMismatch);
    }
    let n = f.source.object_count();
    let sizes: Vec<usize> = (0..n).map(|c| f.elems[c][c].len()).collect();
    let mors = f.source.morphisms();
    let mut out = Vec::new();
    let mut family = alloc::vec![0usize; n];
    if sizes.iter().any(|&s| s == 0) && n > 0 {
        return Ok(out);
    }
    loop {
        let compatible = mors.iter().all(|m| {
            // F(m, id)(x_{tgt}) = F(id, m)(x_{src}) in F(m.src, m.tgt)
            f.lact_apply(*m, m.tgt, family[m.tgt]) == f.ract_apply(*m, m.src, family[m.src])
        });
        if compatible {
            out.push(family.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            family[i] += 1;
            if family[i] < sizes[i] {
                break;
            }
            family[i] = 0;
        }
    }
}

/// A profunctor composition together with its coend bookkeeping: per
/// `(c, a)` the classes of middle-object pairs and the quotient maps, so
/// canonical isomorphisms between composites can be computed and verified
/// on representatives.
pub struct Composition {
    pub prof: SetProfunctor,
    /// `members[c][a]`: per class, the sorted `(b, x, y)` members with
    /// `x in F(b, a)`, `y in G(c, b)`.
    members: Vec<Vec<Vec<Vec<(usize, usize, usize)>>>>,
    /// `cls[c][a]`: local pair index -> class index.
    cls: Vec<Vec<Vec<usize>>>,
    /// `offsets[c][a][b]`: local index base of middle object `b`.
    offsets: Vec<Vec<Vec<usize>>>,
    /// `g_sizes[c][b]` = |G(c, b)| for local index arithmetic.
    g_sizes: Vec<Vec<usize>>,
}

impl Composition {
    pub fn class_count(&self, c: usize, a: usize) -> usize {
        self.members[c][a].len()
    }

    pub fn class_of(&self, c: usize, a: usize, b: usize, x: usize, y: usize) -> usize {
        let local = self.offsets[c][a][b] + x * self.g_sizes[c][b] + y;
        self.cls[c][a][local]
    }

    pub fn rep(&self, c: usize, a: usize, class: usize) -> (usize, usize, usize) {
        self.members[c][a][class][0]
    }

    pub fn class_members(&self, c: usize, a: usize, class: usize) -> &[(usize, usize, usize)] {
        &self.members[c][a][class]
    }

    /// Applies a per-member map and checks that it descends to classes.
    pub fn map_class(
        &self,
        c: usize,
        a: usize,
        class: usize,
        mut image: impl FnMut(usize, usize, usize) -> usize,
    ) -> Result<usize, ProfError> {
        let mut result = None;
        for &(b, x, y) in &self.members[c][a][class] {
            let img = image(b, x, y);
            match result {
                None => result = Some(img),
                Some(prev) if prev != img => {
                    return Err(ProfError::NotWellDefined("class map inconsistent"))
                }
                _ => {}
            }
        }
        result.ok_or(ProfError::NotWellDefined("empty class"))
    }
}

/// Composition of profunctors `F: A -|-> B`, `G: B -|-> C` by the
/// pointwise coend `(G . F)(c, a) = integral^b F(b, a) x G(c, b)`,
/// with the induced actions; the quotient maps of the induced actions are
/// checked to be well defined on classes.
pub fn compose_full(f: &SetProfunctor, g: &SetProfunctor) -> Result<Composition, ProfError> {
    if f.target != g.source {
        return Err(ProfError::CategoryMismatch);
    }
    let a_cat = f.source.clone();
    let b_cat = f.target.clone();
    let c_cat = g.target.clone();
    let (na, nb, nc) = (a_cat.object_count(), b_cat.object_count(), c_cat.object_count());

    let mut members = alloc::vec![alloc::vec![Vec::new(); na]; nc];
    let mut cls = alloc::vec![alloc::vec![Vec::new(); na]; nc];
    let mut offsets = alloc::vec![alloc::vec![alloc::vec![0usize; nb + 1]; na]; nc];
    let mut g_sizes = alloc::vec![alloc::vec![0usize; nb]; nc];
    for c in 0..nc {
        for b in 0..nb {
            g_sizes[c][b] = g.elems[c][b].len();
        }
    }

    let mut elems = alloc::vec![alloc::vec![Vec::new(); na]; nc];
    for c in 0..nc {
        for a in 0..na {
            // local enumeration of pairs (b, x, y)
            for b in 0..nb {
                offsets[c][a][b + 1] =
                    offsets[c][a][b] + f.elems[b][a].len() * g.elems[c][b].len();
            }
            let total = offsets[c][a][nb];
            let local =
                |b: usize, x: usize, y: usize| offsets[c][a][b] + x * g_sizes[c][b] + y;
            let mut uf = UnionFind::new(total);
            for m in b_cat.morphisms() {
                // m: b1 -> b2; x in F(b2, a), y in G(c, b1):
                // (b1, F(m)(x), y) ~ (b2, x, G(m)(y))
                for x in 0..f.elems[m.tgt][a].len() {
                    for y in 0..g.elems[c][m.src].len() {
                        let left = local(m.src, f.lact_apply(m, a, x), y);
                        let right = local(m.tgt, x, g.ract_apply(m, c, y));
                        uf.union(left, right);
                    }
                }
            }
            let mut root_to_class: Vec<Option<usize>> = alloc::vec![None; total];
            let mut class_members: Vec<Vec<(usize, usize, usize)>> = Vec::new();
            let mut class_of_local = alloc::vec![0usize; total];
            for idx in 0..total {
                let root = uf.find(idx);
                let class = *root_to_class[root].get_or_insert_with(|| {
                    class_members.push(Vec::new());
                    class_members.len() - 1
                });
                // decode idx -> (b, x, y)
                let b = offsets[c][a].partition_point(|&o| o <= idx) - 1;
                let rest = idx - offsets[c][a][b];
                let (x, y) = if g_sizes[c][b] == 0 {
                    (0, 0)
                } else {
                    (rest / g_sizes[c][b], rest % g_sizes[c][b])
                };
                class_members[class].push((b, x, y));
                class_of_local[idx] = class;
            }
            elems[c][a] = class_members
                .iter()
                .map(|ms| {
                    let (b, x, y) = ms[0];
                    format!(
                        "[{}:{}|{}]",
                        b_cat.object_label(b),
                        f.elems[b][a][x],
                        g.elems[c][b][y]
                    )
                })
                .collect();
            members[c][a] = class_members;
            cls[c][a] = class_of_local;
        }
    }

    let comp = Composition {
        prof: SetProfunctor {
            source: a_cat.clone(),
            target: c_cat.clone(),
            elems,
            lact: Vec::new(),
            ract: Vec::new(),
        },
        members,
        cls,
        offsets,
        g_sizes,
    };

    // Induced actions, descending to classes; well-definedness is verified
    // member by member.
    let mut lact = Vec::new();
    for m in c_cat.morphisms() {
        // m: c1 -> c2 acts on the y component via G's left action.
        let mut per_a = Vec::with_capacity(na);
        for a in 0..na {
            let mut table = Vec::with_capacity(comp.class_count(m.tgt, a));
            for class in 0..comp.class_count(m.tgt, a) {
                table.push(comp.map_class(m.tgt, a, class, |b, x, y| {
                    comp.class_of(m.src, a, b, x, g.lact_apply(m, b, y))
                })?);
            }
            per_a.push(table);
        }
        lact.push(per_a);
    }
    let mut ract = Vec::new();
    for m in a_cat.morphisms() {
        // m: a1 -> a2 acts on the x component via F's right action.
        let mut per_c = Vec::with_capacity(nc);
        for c in 0..nc {
            let mut table = Vec::with_capacity(comp.class_count(c, m.src));
            for class in 0..comp.class_count(c, m.src) {
                table.push(comp.map_class(c, m.src, class, |b, x, y| {
                    comp.class_of(c, m.tgt, b, f.ract_apply(m, b, x), y)
                })?);
            }
            per_c.push(table);
        }
        ract.push(per_c);
    }

    let prof = SetProfunctor::new(a_cat, c_cat, comp.prof.elems.clone(), lact, ract)?;
    Ok(Composition { prof, ..comp })
}

/// Composition returning only the resulting profunctor.
pub fn compose(f: &SetProfunctor, g: &SetProfunctor) -> Result<SetProfunctor, ProfError> {
    Ok(compose_full(f, g)?.prof)
}

/// A 2-cell between parallel profunctors: one map per `(d, c)` slot,
/// checked to commute with both actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfTransformation {
    /// `components[d][c]`: element map `from(d, c) -> to(d, c)`.
    pub components: Vec<Vec<Vec<usize>>>,
}

impl ProfTransformation {
    pub fn new(
        from: &SetProfunctor,
        to: &SetProfunctor,
        components: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self, ProfError> {
        if from.source != to.source || from.target != to.target {
            return Err(ProfError::CategoryMismatch);
        }
        let (nc, nd) = (from.source.object_count(), from.target.object_count());
        if components.len() != nd || components.iter().any(|row| row.len() != nc) {
            return Err(ProfError::InvalidProfunctor("component table size"));
        }
        for d in 0..nd {
            for c in 0..nc {
                if components[d][c].len() != from.elems[d][c].len()
                    || components[d][c].iter().any(|&x| x >= to.elems[d][c].len())
                {
                    return Err(ProfError::InvalidProfunctor("component shape"));
                }
            }
        }
        // Naturality in both variables.
        for m in from.target.morphisms() {
            for c in 0..nc {
                for x in 0..from.elems[m.tgt][c].len() {
                    let a = components[m.src][c][from.lact_apply(m, c, x)];
                    let b = to.lact_apply(m, c, components[m.tgt][c][x]);
                    if a != b {
                        return Err(ProfError::NotWellDefined("2-cell not natural (left)"));
                    }
                }
            }
        }
        for m in from.source.morphisms() {
            for d in 0..nd {
                for x in 0..from.elems[d][m.src].len() {
                    let a = components[d][m.tgt][from.ract_apply(m, d, x)];
                    let b = to.ract_apply(m, d, components[d][m.src][x]);
                    if a != b {
                        return Err(ProfError::NotWellDefined("2-cell not natural (right)"));
                    }
                }
            }
        }
        Ok(ProfTransformation { components })
    }
}

/// Brute-force enumeration of natural transformations `F => G` between
/// functors `C -> D`: all component families checked directly against the
/// naturality squares.
pub fn natural_transformations_brute(
    c: &FinCategory,
    d: &FinCategory,
    f0: &FinFunctor,
    g0: &FinFunctor,
) -> Vec<Vec<Mor>> {
    let n = c.object_count();
    let sizes: Vec<usize> = (0..n).map(|a| d.hom(f0.apply_obj(a), g0.apply_obj(a)).len()).collect();
    let mut out = Vec::new();
    if sizes.iter().any(|&s| s == 0) && n > 0 {
        return out;
    }
    let mut picks = alloc::vec![0usize; n];
    loop {
        let components: Vec<Mor> = (0..n)
            .map(|a| Mor { src: f0.apply_obj(a), tgt: g0.apply_obj(a), idx: picks[a] })
            .collect();
        let natural = c.morphisms().iter().all(|m| {
            let lhs = d.compose(f0.apply_mor(*m), components[m.tgt]);
            let rhs = d.compose(components[m.src], g0.apply_mor(*m));
            lhs == rhs
        });
        if natural {
            out.push(components);
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            picks[i] += 1;
            if picks[i] < sizes[i] {
                break;
            }
            picks[i] = 0;
        }
    }
}

/// Counts natural transformations via the end
/// `Nat(F, G) = integral_c Hom_D(F c, G c)`, through the generic end
/// machinery on the hom profunctor `H(c1, c2) = Hom_D(F c1, G c2)`.
pub fn nat_count_via_end(
    c: &FinCategory,
    d: &FinCategory,
    f0: &FinFunctor,
    g0: &FinFunctor,
) -> Result<usize, ProfError> {
    let n = c.object_count();
    let mut elems = Vec::with_capacity(n);
    for c1 in 0..n {
        elems.push(
            (0..n).map(|c2| d.hom(f0.apply_obj(c1), g0.apply_obj(c2)).to_vec()).collect(),
        );
    }
    let mut lact = Vec::new();
    for m in c.morphisms() {
        // m: c1' -> c1: precompose F(m): Hom(F c1, G c2) -> Hom(F c1', G c2)
        let fm = f0.apply_mor(m);
        let mut per = Vec::with_capacity(n);
        for c2 in 0..n {
            let gc2 = g0.apply_obj(c2);
            per.push(
                (0..d.hom(fm.tgt, gc2).len())
                    .map(|idx| d.compose(fm, Mor { src: fm.tgt, tgt: gc2, idx }).idx)
                    .collect(),
            );
        }
        lact.push(per);
    }
    let mut ract = Vec::new();
    for m in c.morphisms() {
        // m: c2 -> c2': postcompose G(m)
        let gm = g0.apply_mor(m);
        let mut per = Vec::with_capacity(n);
        for c1 in 0..n {
            let fc1 = f0.apply_obj(c1);
            per.push(
                (0..d.hom(fc1, gm.src).len())
                    .map(|idx| d.compose(Mor { src: fc1, tgt: gm.src, idx }, gm).idx)
                    .collect(),
            );
        }
        ract.push(per);
    }
    let h = SetProfunctor::new(c.clone(), c.clone(), elems, lact, ract)?;
    Ok(end(&h)?.len())
}

/// Verifies the collapse bijection for composition with the identity
/// profunctor: `(Id . F)(d, c) ~ F(d, c)` via acting with the hom
/// component, and dually for `(F . Id)`. Returns false on any slot where
/// the collapse is not a bijection.
pub fn identity_collapse_check(f: &SetProfunctor) -> Result<bool, ProfError> {
    let ida = SetProfunctor::identity_prof(&f.source);
    let idb = SetProfunctor::identity_prof(&f.target);
    let left = compose_full(&ida, f)?;
    let right = compose_full(f, &idb)?;
    let (nc, nd) = (f.source.object_count(), f.target.object_count());
    for d in 0..nd {
        for c in 0..nc {
            // compose(Id_A, F)(d, c): pairs (h in Hom(b, c), y in F(d, b));
            // collapse by the covariant action.
            let mut hit = alloc::vec![false; f.elems[d][c].len()];
            for class in 0..left.class_count(d, c) {
                let img = left.map_class(d, c, class, |b, h, y| {
                    f.ract_apply(Mor { src: b, tgt: c, idx: h }, d, y)
                })?;
                if hit[img] {
                    return Ok(false);
                }
                hit[img] = true;
            }
            if !hit.iter().all(|&b| b) {
                return Ok(false);
            }
            // compose(F, Id_B)(d, c): pairs (x in F(b, c), h in Hom(d, b));
            // collapse by the contravariant action.
            let mut hit = alloc::vec![false; f.elems[d][c].len()];
            for class in 0..right.class_count(d, c) {
                let img = right.map_class(d, c, class, |b, x, h| {
                    f.lact_apply(Mor { src: d, tgt: b, idx: h }, c, x)
                })?;
                if hit[img] {
                    return Ok(false);
                }
                hit[img] = true;
            }
            if !hit.iter().all(|&b| b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks that the two bracketings of a triple composition agree up to the
/// canonical coend bijection `[(x, y), z] -> [x, (y, z)]`, verifying
/// well-definedness and bijectivity on every slot.
pub fn associativity_check(
    p: &SetProfunctor,
    q: &SetProfunctor,
    r: &SetProfunctor,
) -> Result<bool, ProfError> {
    let pq = compose_full(p, q)?;
    let qr = compose_full(q, r)?;
    let left = compose_full(&pq.prof, r)?;
    let right = compose_full(p, &qr.prof)?;
    let na = p.source.object_count();
    let nd = r.target.object_count();
    for d in 0..nd {
        for a in 0..na {
            if left.class_count(d, a) != right.class_count(d, a) {
                return Ok(false);
            }
            let mut hit = alloc::vec![false; right.class_count(d, a)];
            for class in 0..left.class_count(d, a) {
                // member of left: (c_mid, w in (q.p)(c_mid, a), z in r(d, c_mid))
                let img = left.map_class(d, a, class, |c_mid, w, z| {
                    let (b, x, y) = pq.rep(c_mid, a, w);
                    let inner = qr.class_of(d, b, c_mid, y, z);
                    right.class_of(d, a, b, x, inner)
                });
                // the map must also be independent of the chosen member
                // representative of w, which map_class cannot see; check
                // all members of w explicitly.
                let img = match img {
                    Ok(i) => i,
                    Err(_) => return Ok(false),
                };
                for &(c_mid, w, z) in left.class_members(d, a, class) {
                    for &(b, x, y) in pq.class_members(c_mid, a, w) {
                        let inner = qr.class_of(d, b, c_mid, y, z);
                        if right.class_of(d, a, b, x, inner) != img {
                            return Ok(false);
                        }
                    }
                }
                if hit[img] {
                    return Ok(false);
                }
                hit[img] = true;
            }
            if !hit.iter().all(|&b| b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FinAbGroup;

    #[test]
    fn category_constructors_validate() {
        let z2 = FinCategory::one_object_group(&FinAbGroup::cyclic(2));
        assert_eq!(z2.object_count(), 1);
        assert_eq!(z2.hom(0, 0).len(), 2);
        let chain = FinCategory::poset_chain(3);
        assert_eq!(chain.object_count(), 3);
        assert_eq!(chain.hom(0, 2).len(), 1);
        assert_eq!(chain.hom(2, 0).len(), 0);
        let endo = FinCategory::three_object_endo();
        assert_eq!(endo.hom(0, 1).len(), 2);
        assert_eq!(endo.hom(0, 2).len(), 1);
    }

    #[test]
    fn invalid_category_rejected() {
        // 2-element "monoid" with non-associative table: x.x = id, but
        // composition table that breaks the identity law.
        let objects = alloc::vec![String::from("*")];
        let homs = alloc::vec![alloc::vec![alloc::vec![String::from("id"), String::from("x")]]];
        let bad = FinCategory::new(
            objects,
            homs,
            alloc::vec![0],
            alloc::vec![alloc::vec![alloc::vec![alloc::vec![
                alloc::vec![0, 1],
                alloc::vec![0, 0],
            ]]]],
        );
        assert!(matches!(bad, Err(ProfError::InvalidCategory(_))));
    }

    #[test]
    fn identity_profunctor_is_valid() {
        for cat in [
            FinCategory::one_object_group(&FinAbGroup::cyclic(2)),
            FinCategory::poset_chain(3),
            FinCategory::three_object_endo(),
        ] {
            let _ = SetProfunctor::identity_prof(&cat);
        }
    }

    #[test]
    fn coend_examples() {
        // Constant singleton functor on Z2: one class.
        let z2 = FinCategory::one_object_group(&FinAbGroup::cyclic(2));
        let one = SetProfunctor::new(
            z2.clone(),
            z2.clone(),
            alloc::vec![alloc::vec![alloc::vec![String::from("*")]]],
            alloc::vec![alloc::vec![alloc::vec![0]]; 2],
            alloc::vec![alloc::vec![alloc::vec![0]]; 2],
        )
        .unwrap();
        assert_eq!(coend(&one).unwrap().classes.len(), 1);

        // Hom x Hom on the one-object Z2 category: the composite relation
        // glues the 4 pairs into 2 classes.
        let idp = SetProfunctor::identity_prof(&z2);
        let hh = compose_full(&idp, &idp).unwrap();
        assert_eq!(hh.class_count(0, 0), 2);

        // Discrete category: no relations, one class per object.
        let disc = FinCategory::discrete(3);
        let idp = SetProfunctor::identity_prof(&disc);
        assert_eq!(coend(&idp).unwrap().classes.len(), 3);
    }

    #[test]
    fn coend_is_order_independent() {
        for cat in [
            FinCategory::one_object_group(&FinAbGroup::cyclic(2)),
            FinCategory::poset_chain(3),
            FinCategory::three_object_endo(),
        ] {
            let idp = SetProfunctor::identity_prof(&cat);
            assert!(coend_order_independent(&idp).unwrap());
        }
    }

    #[test]
    fn end_examples() {
        // Identity profunctor over the discrete 2-object category: the end
        // is the product of the diagonal hom-sets.
        let disc = FinCategory::discrete(2);
        let idp = SetProfunctor::identity_prof(&disc);
        assert_eq!(end(&idp).unwrap().len(), 1);

        // Nat(Id, Id) on the one-object Z2 category: the center, 2 elements.
        let z2 = FinCategory::one_object_group(&FinAbGroup::cyclic(2));
        let idp = SetProfunctor::identity_prof(&z2);
        assert_eq!(end(&idp).unwrap().len(), 2);

        // Empty category: the empty family.
        let empty = FinCategory::discrete(0);
        let idp = SetProfunctor::identity_prof(&empty);
        assert_eq!(end(&idp).unwrap().len(), 1);
    }

    #[test]
    fn identity_collapse_bijection() {
        for cat in [
            FinCategory::one_object_group(&FinAbGroup::cyclic(2)),
            FinCategory::poset_chain(3),
            FinCategory::three_object_endo(),
        ] {
            let idp = SetProfunctor::identity_prof(&cat);
            assert!(identity_collapse_check(&idp).unwrap());
            // and for a representable
            let f0 = FinFunctor::identity(&cat);
            let lower = SetProfunctor::representable_lower(&cat, &cat, &f0);
            assert!(identity_collapse_check(&lower).unwrap());
        }
    }

    #[test]
    fn representables_of_identity_are_identity() {
        let cat = FinCategory::three_object_endo();
        let f0 = FinFunctor::identity(&cat);
        let lower = SetProfunctor::representable_lower(&cat, &cat, &f0);
        let idp = SetProfunctor::identity_prof(&cat);
        assert_eq!(lower, idp);
    }

    #[test]
    fn constant_functor_representable() {
        // Constant functor to the top of a chain: F_*(d, c) = Hom(d, top).
        let chain = FinCategory::poset_chain(3);
        let obj_map = alloc::vec![2, 2, 2];
        let mut mor_map = Vec::new();
        for a in 0..3 {
            mor_map.push(
                (0..3)
                    .map(|b| (0..chain.hom(a, b).len()).map(|_| 0usize).collect())
                    .collect(),
            );
        }
        let f0 = FinFunctor::new(&chain, &chain, obj_map, mor_map).unwrap();
        let lower = SetProfunctor::representable_lower(&chain, &chain, &f0);
        for d in 0..3 {
            for c in 0..3 {
                assert_eq!(lower.elems(d, c).len(), chain.hom(d, 2).len());
            }
        }
    }

    #[test]
    fn poset_inclusion_representables() {
        // Inclusion {0} -> {0 -> 1}: tables are hand-checkable.
        let single = FinCategory::poset_chain(1);
        let chain = FinCategory::poset_chain(2);
        let f0 = FinFunctor::new(
            &single,
            &chain,
            alloc::vec![0],
            alloc::vec![alloc::vec![alloc::vec![0]]],
        )
        .unwrap();
        let lower = SetProfunctor::representable_lower(&single, &chain, &f0);
        // F_*(d, c) = Hom_chain(d, 0): nonempty only for d = 0.
        assert_eq!(lower.elems(0, 0).len(), 1);
        assert_eq!(lower.elems(1, 0).len(), 0);
        let upper = SetProfunctor::representable_upper(&single, &chain, &f0);
        // F^*(c, d) = Hom_chain(0, d): always 1 element.
        assert_eq!(upper.elems(0, 0).len(), 1);
        assert_eq!(upper.elems(0, 1).len(), 1);
    }

    #[test]
    fn composition_over_chain_matches_hand_quotient() {
        // Id . Id over the chain 0 -> 1 -> 2: the composite must again be
        // the hom profunctor, with 1 class for d <= c and 0 otherwise.
        let chain = FinCategory::poset_chain(3);
        let idp = SetProfunctor::identity_prof(&chain);
        let comp = compose_full(&idp, &idp).unwrap();
        for d in 0..3 {
            for c in 0..3 {
                let expected = usize::from(d <= c);
                assert_eq!(comp.class_count(d, c), expected, "slot ({d},{c})");
            }
        }
    }

    #[test]
    fn representables_compose_to_composite_representable() {
        // Two inclusions along the chain: F: {0} -> {0,1}, G: {0,1} -> {0,1,2}.
        let c1 = FinCategory::poset_chain(1);
        let c2 = FinCategory::poset_chain(2);
        let c3 = FinCategory::poset_chain(3);
        let f0 = FinFunctor::new(&c1, &c2, alloc::vec![0], alloc::vec![alloc::vec![alloc::vec![0]]])
            .unwrap();
        let g_obj = alloc::vec![0, 1];
        let mut g_mor = Vec::new();
        for a in 0..2 {
            g_mor.push(
                (0..2)
                    .map(|b| (0..c2.hom(a, b).len()).map(|_| 0usize).collect())
                    .collect(),
            );
        }
        let g0 = FinFunctor::new(&c2, &c3, g_obj, g_mor).unwrap();
        let fg = FinFunctor::new(&c1, &c3, alloc::vec![0], alloc::vec![alloc::vec![alloc::vec![0]]])
            .unwrap();

        let f_low = SetProfunctor::representable_lower(&c1, &c2, &f0);
        let g_low = SetProfunctor::representable_lower(&c2, &c3, &g0);
        let fg_low = SetProfunctor::representable_lower(&c1, &c3, &fg);
        let comp = compose(&f_low, &g_low).unwrap();
        for d in 0..3 {
            assert_eq!(comp.elems(d, 0).len(), fg_low.elems(d, 0).len());
        }
    }

    #[test]
    fn composition_is_associative_up_to_canonical_bijection() {
        for cat in [
            FinCategory::one_object_group(&FinAbGroup::cyclic(2)),
            FinCategory::poset_chain(3),
            FinCategory::three_object_endo(),
        ] {
            let idp = SetProfunctor::identity_prof(&cat);
            assert!(associativity_check(&idp, &idp, &idp).unwrap());
        }
    }

    /// Brute-force enumeration of all functors `C -> D` for the nat-count
    /// sweep below.
    fn enumerate_functors(c: &FinCategory, d: &FinCategory) -> Vec<FinFunctor> {
        let n = c.object_count();
        let mut out = Vec::new();
        let mut obj = alloc::vec![0usize; n];
        loop {
            // mixed-radix sweep over morphism images for this object map
            let mut slots = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    for f in 0..c.hom(a, b).len() {
                        slots.push((a, b, f));
                    }
                }
            }
            let sizes: Vec<usize> =
                slots.iter().map(|&(a, b, _)| d.hom(obj[a], obj[b]).len()).collect();
            if sizes.iter().all(|&s| s > 0) || slots.is_empty() {
                let mut picks = alloc::vec![0usize; slots.len()];
                loop {
                    let mut mor_map: Vec<Vec<Vec<usize>>> = (0..n)
                        .map(|a| (0..n).map(|b| alloc::vec![0; c.hom(a, b).len()]).collect())
                        .collect();
                    for (slot, &(a, b, f)) in slots.iter().enumerate() {
                        mor_map[a][b][f] = picks[slot];
                    }
                    if let Ok(fun) = FinFunctor::new(c, d, obj.clone(), mor_map) {
                        out.push(fun);
                    }
                    let mut i = slots.len();
                    let done = loop {
                        if i == 0 {
                            break true;
                        }
                        i -= 1;
                        picks[i] += 1;
                        if picks[i] < sizes[i] {
                            break false;
                        }
                        picks[i] = 0;
                    };
                    if done {
                        break;
                    }
                }
            }
            let mut i = n;
            let done = loop {
                if i == 0 {
                    break true;
                }
                i -= 1;
                obj[i] += 1;
                if obj[i] < d.object_count() {
                    break false;
                }
                obj[i] = 0;
            };
            if done {
                return out;
            }
        }
    }

    #[test]
    fn nat_counts_match_brute_force_for_all_functor_pairs() {
        // Every ordered pair of functors between the small test categories.
        let z2 = FinCategory::one_object_group(&FinAbGroup::cyclic(2));
        let chain = FinCategory::poset_chain(3);
        for (c, d) in [(&z2, &z2), (&chain, &chain), (&z2, &chain), (&chain, &z2)] {
            let functors = enumerate_functors(c, d);
            assert!(!functors.is_empty());
            for f0 in &functors {
                for g0 in &functors {
                    assert_eq!(
                        natural_transformations_brute(c, d, f0, g0).len(),
                        nat_count_via_end(c, d, f0, g0).unwrap(),
                    );
                }
            }
        }
        // A sample of endofunctor pairs on the three-object category.
        let endo = FinCategory::three_object_endo();
        let functors = enumerate_functors(&endo, &endo);
        assert!(functors.len() >= 2);
        for f0 in functors.iter().take(6) {
            for g0 in functors.iter().take(6) {
                assert_eq!(
                    natural_transformations_brute(&endo, &endo, f0, g0).len(),
                    nat_count_via_end(&endo, &endo, f0, g0).unwrap(),
                );
            }
        }
    }

    #[test]
    fn nat_counts_match_brute_force() {
        // Identity vs identity over each test category, plus the flip
        // functor on the one-object Z2 category.
        for cat in [
            FinCategory::one_object_group(&FinAbGroup::cyclic(2)),
            FinCategory::poset_chain(3),
            FinCategory::three_object_endo(),
        ] {
            let id = FinFunctor::identity(&cat);
            let brute = natural_transformations_brute(&cat, &cat, &id, &id).len();
            let via_end = nat_count_via_end(&cat, &cat, &id, &id).unwrap();
            assert_eq!(brute, via_end);
        }
        // All endofunctors of the one-object Z3 category are group
        // endomorphisms; try a non-identity one.
        let z3 = FinCategory::one_object_group(&FinAbGroup::cyclic(3));
        let doubling = FinFunctor::new(
            &z3,
            &z3,
            alloc::vec![0],
            alloc::vec![alloc::vec![alloc::vec![0, 2, 1]]],
        )
        .unwrap();
        let id = FinFunctor::identity(&z3);
        assert_eq!(
            natural_transformations_brute(&z3, &z3, &id, &doubling).len(),
            nat_count_via_end(&z3, &z3, &id, &doubling).unwrap()
        );
    }
}
