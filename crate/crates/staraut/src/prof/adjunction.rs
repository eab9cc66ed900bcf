//! The representable adjunction `F_* -| F^*` in the profunctor
//! bicategory: the unit is given by the action of the functor on hom-sets,
//! the counit by composition, and both triangle identities are verified as
//! equalities of maps between coend quotients, with every canonical
//! identification checked for well-definedness member by member.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{
    compose_full, Composition, FinCategory, FinFunctor, Mor, ProfError, ProfTransformation,
    SetProfunctor,
};

/// Outcome of the adjunction verification.
#[derive(Clone, Debug)]
pub struct AdjunctionReport {
    pub unit_natural: bool,
    pub counit_natural: bool,
    pub triangle_lower: bool,
    pub triangle_upper: bool,
    pub failures: Vec<String>,
}

impl AdjunctionReport {
    pub fn all_pass(&self) -> bool {
        self.unit_natural && self.counit_natural && self.triangle_lower && self.triangle_upper
    }
}

/// Builds `F_*` and `F^*`, the unit `Id_C => F^* . F_*` and counit
/// `F_* . F^* => Id_D`, checks both are natural 2-cells, and verifies the
/// two triangle identities on the coend quotients.
pub fn check_adjunction(
    c_cat: &FinCategory,
    d_cat: &FinCategory,
    f0: &FinFunctor,
) -> Result<AdjunctionReport, ProfError> {
    let lower = SetProfunctor::representable_lower(c_cat, d_cat, f0);
    let upper = SetProfunctor::representable_upper(c_cat, d_cat, f0);
    let id_c = SetProfunctor::identity_prof(c_cat);
    let id_d = SetProfunctor::identity_prof(d_cat);
    let z_comp = compose_full(&lower, &upper)?; // F^* . F_* : C -|-> C
    let w_comp = compose_full(&upper, &lower)?; // F_* . F^* : D -|-> D

    let mut failures = Vec::new();
    let nc = c_cat.object_count();
    let nd = d_cat.object_count();

    // Unit components: h in Hom_C(c1, c2) pairs F(h) with the identity at
    // the middle object F(c1).
    let mut unit_components = Vec::with_capacity(nc);
    for c1 in 0..nc {
        let mut per = Vec::with_capacity(nc);
        for c2 in 0..nc {
            per.push(
                (0..c_cat.hom(c1, c2).len())
                    .map(|idx| {
                        let h = Mor { src: c1, tgt: c2, idx };
                        let fh = f0.apply_mor(h);
                        let fc1 = f0.apply_obj(c1);
                        z_comp.class_of(c1, c2, fc1, fh.idx, d_cat.id(fc1).idx)
                    })
                    .collect(),
            );
        }
        unit_components.push(per);
    }
    let unit = ProfTransformation::new(&id_c, &z_comp.prof, unit_components.clone());
    let unit_natural = match &unit {
        Ok(_) => true,
        Err(e) => {
            failures.push(format!("unit is not a natural 2-cell: {e}"));
            false
        }
    };

    // Counit components: a class [(b, x: F b -> d2, y: d1 -> F b)] maps to
    // the composite x . y in Hom_D(d1, d2); well-definedness over all
    // members is the content of the coend collapse.
    let mut counit_components = Vec::with_capacity(nd);
    let mut counit_ok = true;
    for d1 in 0..nd {
        let mut per = Vec::with_capacity(nd);
        for d2 in 0..nd {
            let mut table = Vec::with_capacity(w_comp.class_count(d1, d2));
            for class in 0..w_comp.class_count(d1, d2) {
                match w_comp.map_class(d1, d2, class, |b, x, y| {
                    let fb = f0.apply_obj(b);
                    d_cat
                        .compose(Mor { src: d1, tgt: fb, idx: y }, Mor { src: fb, tgt: d2, idx: x })
                        .idx
                }) {
                    Ok(idx) => table.push(idx),
                    Err(e) => {
                        failures.push(format!("counit collapse ill-defined: {e}"));
                        counit_ok = false;
                        table.push(0);
                    }
                }
            }
            per.push(table);
        }
        counit_components.push(per);
    }
    let counit = ProfTransformation::new(&w_comp.prof, &id_d, counit_components.clone());
    let counit_natural = counit_ok
        && match &counit {
            Ok(_) => true,
            Err(e) => {
                failures.push(format!("counit is not a natural 2-cell: {e}"));
                false
            }
        };

    let triangle_lower = triangle_on_lower(
        c_cat,
        d_cat,
        f0,
        &lower,
        &id_c,
        &id_d,
        &z_comp,
        &w_comp,
        &unit_components,
        &counit_components,
        &mut failures,
    )?;
    let triangle_upper = triangle_on_upper(
        c_cat,
        d_cat,
        f0,
        &upper,
        &id_c,
        &id_d,
        &z_comp,
        &w_comp,
        &unit_components,
        &counit_components,
        &mut failures,
    )?;

    Ok(AdjunctionReport { unit_natural, counit_natural, triangle_lower, triangle_upper, failures })
}

/// Triangle on `F_*`: the composite
/// `F_* ~ F_* . Id_C => F_* . (F^* . F_*) ~ (F_* . F^*) . F_* => Id_D . F_* ~ F_*`
/// must be the identity on every element `z in Hom_D(d, F c)`.
#[allow(clippy::too_many_arguments)]
fn triangle_on_lower(
    c_cat: &FinCategory,
    d_cat: &FinCategory,
    f0: &FinFunctor,
    lower: &SetProfunctor,
    id_c: &SetProfunctor,
    id_d: &SetProfunctor,
    z_comp: &Composition,
    w_comp: &Composition,
    unit_components: &[Vec<Vec<usize>>],
    counit_components: &[Vec<Vec<usize>>],
    failures: &mut Vec<String>,
) -> Result<bool, ProfError> {
    let zf = compose_full(id_c, lower)?; // (d, c): (b in C, h in Hom_C(b, c), y in Hom_D(d, F b))
    let zcomp = compose_full(&z_comp.prof, lower)?; // (b in C, class in Z(b, c), y)
    let wcomp = compose_full(lower, &w_comp.prof)?; // (b in D, x in Hom(b, F c), class in W(d, b))
    let idd_comp = compose_full(lower, id_d)?; // (b in D, x in Hom(b, F c), h in Hom_D(d, b))
    let mut ok = true;

    for d in 0..d_cat.object_count() {
        for c in 0..c_cat.object_count() {
            let fc = f0.apply_obj(c);
            for z in 0..d_cat.hom(d, fc).len() {
                // Step 1: z -> [(id_c, z)].
                let s1 = zf.class_of(d, c, c, c_cat.id(c).idx, z);
                // Step 2: whisker the unit into the identity factor.
                let s2 = zf.map_class(d, c, s1, |b, h, y| {
                    zcomp.class_of(d, c, b, unit_components[b][c][h], y)
                })?;
                // Step 3: associator, checked over every member of both
                // the outer class and the inner coend class.
                let mut s3 = None;
                for &(b, w, y) in zcomp.class_members(d, c, s2) {
                    for &(m, xx, yy) in z_comp.class_members(b, c, w) {
                        let inner = w_comp.class_of(d, m, b, yy, y);
                        let img = wcomp.class_of(d, c, m, xx, inner);
                        match s3 {
                            None => s3 = Some(img),
                            Some(prev) if prev != img => {
                                failures
                                    .push(String::from("lower triangle: associator ill-defined"));
                                return Ok(false);
                            }
                            _ => {}
                        }
                    }
                }
                let s3 = s3.expect("nonempty class");
                // Step 4: whisker the counit into the W factor.
                let s4 = wcomp.map_class(d, c, s3, |b, x, w| {
                    idd_comp.class_of(d, c, b, x, counit_components[d][b][w])
                })?;
                // Step 5: collapse against the identity profunctor.
                let s5 = idd_comp.map_class(d, c, s4, |b, x, h| {
                    lower.lact_apply(Mor { src: d, tgt: b, idx: h }, c, x)
                })?;
                if s5 != z {
                    ok = false;
                    failures.push(format!(
                        "lower triangle: element {z} at (d={d}, c={c}) maps to {s5}"
                    ));
                }
            }
        }
    }
    Ok(ok)
}

/// Triangle on `F^*`: the composite
/// `F^* ~ Id_C . F^* => (F^* . F_*) . F^* ~ F^* . (F_* . F^*) => F^* . Id_D ~ F^*`
/// must be the identity on every element `z in Hom_D(F c, d)`.
#[allow(clippy::too_many_arguments)]
fn triangle_on_upper(
    c_cat: &FinCategory,
    d_cat: &FinCategory,
    f0: &FinFunctor,
    upper: &SetProfunctor,
    id_c: &SetProfunctor,
    id_d: &SetProfunctor,
    z_comp: &Composition,
    w_comp: &Composition,
    unit_components: &[Vec<Vec<usize>>],
    counit_components: &[Vec<Vec<usize>>],
    failures: &mut Vec<String>,
) -> Result<bool, ProfError> {
    let uf = compose_full(upper, id_c)?; // (c, d): (b in C, x in Hom(F b, d), h in Hom_C(c, b))
    let ucomp = compose_full(upper, &z_comp.prof)?; // (b in C, x, class in Z(c, b))
    let vcomp = compose_full(&w_comp.prof, upper)?; // (b' in D, class in W(b', d), y in Hom(F c, b'))
    let idd2 = compose_full(id_d, upper)?; // (b in D, h in Hom_D(b, d), y in Hom(F c, b))
    let mut ok = true;

    for c in 0..c_cat.object_count() {
        for d in 0..d_cat.object_count() {
            let fc = f0.apply_obj(c);
            for z in 0..d_cat.hom(fc, d).len() {
                // Step 1: z -> [(z, id_c)].
                let s1 = uf.class_of(c, d, c, z, c_cat.id(c).idx);
                // Step 2: whisker the unit into the identity factor.
                let s2 = uf.map_class(c, d, s1, |b, x, h| {
                    ucomp.class_of(c, d, b, x, unit_components[c][b][h])
                })?;
                // Step 3: inverse associator, checked over all members.
                let mut s3 = None;
                for &(b, x, w) in ucomp.class_members(c, d, s2) {
                    for &(m, xx, yy) in z_comp.class_members(c, b, w) {
                        let inner = w_comp.class_of(m, d, b, x, xx);
                        let img = vcomp.class_of(c, d, m, inner, yy);
                        match s3 {
                            None => s3 = Some(img),
                            Some(prev) if prev != img => {
                                failures
                                    .push(String::from("upper triangle: associator ill-defined"));
                                return Ok(false);
                            }
                            _ => {}
                        }
                    }
                }
                let s3 = s3.expect("nonempty class");
                // Step 4: whisker the counit into the W factor.
                let s4 = vcomp.map_class(c, d, s3, |b, w, y| {
                    idd2.class_of(c, d, b, counit_components[b][d][w], y)
                })?;
                // Step 5: collapse against the identity profunctor.
                let s5 = idd2.map_class(c, d, s4, |b, h, y| {
                    upper.ract_apply(Mor { src: b, tgt: d, idx: h }, c, y)
                })?;
                if s5 != z {
                    ok = false;
                    failures.push(format!(
                        "upper triangle: element {z} at (c={c}, d={d}) maps to {s5}"
                    ));
                }
            }
        }
    }
    Ok(ok)
}
