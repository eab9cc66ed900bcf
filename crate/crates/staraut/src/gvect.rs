//! Finite-dimensional `G`-graded vector spaces over exact rationals:
//! graded tensor product, the degree-shifted duality `(-)^{g0}`, the double
//! dual, degree-graded internal homs with currying, the induced second
//! tensor product, and the star-autonomy adjunction witnessed by explicit
//! invertible matrices.
//!
//! Everything is a statement about dimensions and reindexings, so all
//! isomorphisms are produced as concrete matrices in canonical bases
//! indexed by `(degree, position)`; "isomorphic" always means an explicit
//! invertible map here.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::exact::RationalMatrix;
use crate::groups::{FinAbGroup, GroupElement};
use crate::CheckResult;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GvectError {
    GroupMismatch,
    DimsSizeMismatch { expected: usize, got: usize },
    /// A block's shape does not match the graded dimensions.
    BlockShape { degree: usize },
    /// Composition or comparison of maps with incompatible endpoints.
    SpaceMismatch,
}

impl fmt::Display for GvectError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GvectError::GroupMismatch => write!(f, "spaces are graded over different groups"),
            GvectError::DimsSizeMismatch { expected, got } => {
                write!(f, "dimension table has {got} entries, group has order {expected}")
            }
            GvectError::BlockShape { degree } => {
                write!(f, "block at degree index {degree} has the wrong shape")
            }
            GvectError::SpaceMismatch => write!(f, "maps have incompatible source or target"),
        }
    }
}

/// A finite-dimensional `G`-graded vector space, given by the dimension of
/// every homogeneous component (zeros allowed).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedSpace {
    group: FinAbGroup,
    dims: Vec<usize>,
}

impl GradedSpace {
    pub fn new(group: FinAbGroup, dims: Vec<usize>) -> Result<Self, GvectError> {
        if dims.len() != group.order() as usize {
            return Err(GvectError::DimsSizeMismatch {
                expected: group.order() as usize,
                got: dims.len(),
            });
        }
        Ok(GradedSpace { group, dims })
    }

    /// The simple object `k_g`: one dimension concentrated in degree `g`.
    pub fn simple(group: FinAbGroup, g: &GroupElement) -> Self {
        let mut dims = alloc::vec![0; group.order() as usize];
        dims[group.index_of(g)] = 1;
        GradedSpace { group, dims }
    }

    /// The tensor unit `k_0`.
    pub fn unit(group: FinAbGroup) -> Self {
        let zero = group.zero();
        Self::simple(group, &zero)
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, g: &GroupElement) -> usize {
        self.dims[self.group.index_of(g)]
    }

    pub fn dim_idx(&self, idx: usize) -> usize {
        self.dims[idx]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// `(V (x) W)_g = sum_{h + k = g} V_h (x) W_k`, dimensions by
    /// convolution.
    pub fn tensor(&self, other: &GradedSpace) -> Result<GradedSpace, GvectError> {
        if self.group != other.group {
            return Err(GvectError::GroupMismatch);
        }
        let n = self.group.order() as usize;
        let mut dims = alloc::vec![0usize; n];
        for (g_idx, slot) in dims.iter_mut().enumerate() {
            let g = self.group.element_at(g_idx);
            for h_idx in 0..n {
                let h = self.group.element_at(h_idx);
                let k = self.group.sub(&g, &h);
                *slot += self.dims[h_idx] * other.dim_at(&k);
            }
        }
        Ok(GradedSpace { group: self.group.clone(), dims })
    }

    /// `(V^{g0})_g = (V_{g0 - g})^*`: the dual with dimensions reindexed by
    /// `g -> g0 - g`.
    pub fn dual_g0(&self, g0: &GroupElement) -> GradedSpace {
        let n = self.group.order() as usize;
        let mut dims = alloc::vec![0usize; n];
        for (g_idx, slot) in dims.iter_mut().enumerate() {
            let g = self.group.element_at(g_idx);
            *slot = self.dim_at(&self.group.sub(g0, &g));
        }
        GradedSpace { group: self.group.clone(), dims }
    }

    /// `iHom(V, W)_g = Hom_g(V, W)`, of dimension
    /// `sum_h dim V_h * dim W_{g + h}`.
    pub fn internal_hom(&self, other: &GradedSpace) -> Result<GradedSpace, GvectError> {
        if self.group != other.group {
            return Err(GvectError::GroupMismatch);
        }
        let n = self.group.order() as usize;
        let mut dims = alloc::vec![0usize; n];
        for (g_idx, slot) in dims.iter_mut().enumerate() {
            let g = self.group.element_at(g_idx);
            for h_idx in 0..n {
                let h = self.group.element_at(h_idx);
                *slot += self.dims[h_idx] * other.dim_at(&self.group.add(&g, &h));
            }
        }
        Ok(GradedSpace { group: self.group.clone(), dims })
    }

    /// The second tensor product `V (x)_{g0} W = (V^{g0} (x) W^{g0})^{g0}`,
    /// computed literally by that composition. The dimension shift
    /// `(V (x)_{g0} W)_g = (V (x) W)_{g + g0}` is asserted.
    pub fn tensor_g0(&self, other: &GradedSpace, g0: &GroupElement) -> Result<GradedSpace, GvectError> {
        let twisted = self.dual_g0(g0).tensor(&other.dual_g0(g0))?.dual_g0(g0);
        let plain = self.tensor(other)?;
        for g_idx in 0..self.group.order() as usize {
            let g = self.group.element_at(g_idx);
            let shifted = plain.dim_at(&self.group.add(&g, g0));
            assert_eq!(twisted.dims[g_idx], shifted, "second tensor product shift identity failed");
        }
        Ok(twisted)
    }

    /// Position of the basis vector `u_{h,i} (x) v_{k,j}` (with `h + k =
    /// g`) inside the canonical basis of `(V (x) W)_g`: degrees `h` in
    /// element order, pairs `(i, j)` lexicographic.
    fn tensor_basis_index(
        &self,
        other: &GradedSpace,
        g: &GroupElement,
        h: &GroupElement,
        i: usize,
        j: usize,
    ) -> usize {
        let mut offset = 0;
        let h_idx = self.group.index_of(h);
        for idx in 0..h_idx {
            let hh = self.group.element_at(idx);
            let k = self.group.sub(g, &hh);
            offset += self.dims[idx] * other.dim_at(&k);
        }
        let k = self.group.sub(g, h);
        offset + i * other.dim_at(&k) + j
    }

    /// Position of the elementary hom `v_{h,i} -> w_{g+h,j}` inside the
    /// canonical basis of `iHom(V, W)_g`: degrees `h` in element order,
    /// pairs `(i, j)` lexicographic.
    fn ihom_basis_index(
        &self,
        other: &GradedSpace,
        g: &GroupElement,
        h: &GroupElement,
        i: usize,
        j: usize,
    ) -> usize {
        let mut offset = 0;
        let h_idx = self.group.index_of(h);
        for idx in 0..h_idx {
            let hh = self.group.element_at(idx);
            offset += self.dims[idx] * other.dim_at(&self.group.add(g, &hh));
        }
        offset + i * other.dim_at(&self.group.add(g, h)) + j
    }
}

/// A homogeneous linear map of fixed degree: `f(V_h) <= W_{degree + h}`,
/// stored as one exact matrix per source degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedMap {
    source: GradedSpace,
    target: GradedSpace,
    degree: GroupElement,
    blocks: Vec<RationalMatrix>,
}

impl GradedMap {
    pub fn new(
        source: GradedSpace,
        target: GradedSpace,
        degree: GroupElement,
        blocks: Vec<RationalMatrix>,
    ) -> Result<Self, GvectError> {
        if source.group() != target.group() {
            return Err(GvectError::GroupMismatch);
        }
        let n = source.group().order() as usize;
        if blocks.len() != n {
            return Err(GvectError::DimsSizeMismatch { expected: n, got: blocks.len() });
        }
        for h_idx in 0..n {
            let h = source.group().element_at(h_idx);
            let out = source.group().add(&degree, &h);
            if blocks[h_idx].rows() != target.dim_at(&out) || blocks[h_idx].cols() != source.dims[h_idx]
            {
                return Err(GvectError::BlockShape { degree: h_idx });
            }
        }
        Ok(GradedMap { source, target, degree, blocks })
    }

    pub fn zero(source: GradedSpace, target: GradedSpace, degree: GroupElement) -> Result<Self, GvectError> {
        let n = source.group().order() as usize;
        let blocks = (0..n)
            .map(|h_idx| {
                let h = source.group().element_at(h_idx);
                let out = source.group().add(&degree, &h);
                RationalMatrix::zero(target.dim_at(&out), source.dims[h_idx])
            })
            .collect();
        Self::new(source, target, degree, blocks)
    }

    pub fn identity(space: &GradedSpace) -> Self {
        let blocks = space.dims.iter().map(|&d| RationalMatrix::identity(d)).collect();
        GradedMap {
            source: space.clone(),
            target: space.clone(),
            degree: space.group().zero(),
            blocks,
        }
    }

    pub fn source(&self) -> &GradedSpace {
        &self.source
    }

    pub fn target(&self) -> &GradedSpace {
        &self.target
    }

    pub fn degree(&self) -> &GroupElement {
        &self.degree
    }

    pub fn blocks(&self) -> &[RationalMatrix] {
        &self.blocks
    }

    pub fn block(&self, h_idx: usize) -> &RationalMatrix {
        &self.blocks[h_idx]
    }

    /// `self` after `other`; degrees add.
    pub fn compose(&self, other: &GradedMap) -> Result<GradedMap, GvectError> {
        if other.target != self.source {
            return Err(GvectError::SpaceMismatch);
        }
        let group = self.source.group().clone();
        let n = group.order() as usize;
        let degree = group.add(&self.degree, &other.degree);
        let blocks = (0..n)
            .map(|h_idx| {
                let h = group.element_at(h_idx);
                let mid = group.add(&other.degree, &h);
                self.blocks[group.index_of(&mid)].mul(&other.blocks[h_idx])
            })
            .collect();
        GradedMap::new(other.source.clone(), self.target.clone(), degree, blocks)
    }

    pub fn is_invertible(&self) -> bool {
        self.blocks.iter().all(|b| b.is_invertible())
    }

    /// Kronecker-style tensor of two degree-zero maps, in the canonical
    /// tensor bases.
    pub fn tensor_map(&self, other: &GradedMap) -> Result<GradedMap, GvectError> {
        let group = self.source.group().clone();
        if other.source.group() != &group {
            return Err(GvectError::GroupMismatch);
        }
        if !self.degree.residues().iter().all(|&r| r == 0)
            || !other.degree.residues().iter().all(|&r| r == 0)
        {
            return Err(GvectError::SpaceMismatch);
        }
        let src = self.source.tensor(&other.source)?;
        let tgt = self.target.tensor(&other.target)?;
        let n = group.order() as usize;
        let mut blocks = Vec::with_capacity(n);
        for d_idx in 0..n {
            let d = group.element_at(d_idx);
            let mut m = RationalMatrix::zero(tgt.dims[d_idx], src.dims[d_idx]);
            for h_idx in 0..n {
                let h = group.element_at(h_idx);
                let k = group.sub(&d, &h);
                let fb = &self.blocks[h_idx];
                let gb = &other.blocks[group.index_of(&k)];
                for i_out in 0..fb.rows() {
                    for j_out in 0..gb.rows() {
                        let row =
                            self.target.tensor_basis_index(&other.target, &d, &h, i_out, j_out);
                        for i_in in 0..fb.cols() {
                            for j_in in 0..gb.cols() {
                                let col = self
                                    .source
                                    .tensor_basis_index(&other.source, &d, &h, i_in, j_in);
                                let v = fb.get(i_out, i_in) * gb.get(j_out, j_in);
                                if !v.is_zero() {
                                    m.set(row, col, v);
                                }
                            }
                        }
                    }
                }
            }
            blocks.push(m);
        }
        GradedMap::new(src, tgt, group.zero(), blocks)
    }
}

/// Functorial dual of a degree-zero map: `f^{g0}: W^{g0} -> V^{g0}` with
/// `f^{g0}(w')(v) = w'(f(v))`; blockwise the transpose placed at the
/// reindexed degree. Contravariant: `dual(f . h) = dual(h) . dual(f)`.
pub fn dual_g0_map(f: &GradedMap, g0: &GroupElement) -> Result<GradedMap, GvectError> {
    if !f.degree.residues().iter().all(|&r| r == 0) {
        return Err(GvectError::SpaceMismatch);
    }
    let group = f.source.group().clone();
    let n = group.order() as usize;
    let src = f.target.dual_g0(g0);
    let tgt = f.source.dual_g0(g0);
    let blocks = (0..n)
        .map(|g_idx| {
            let g = group.element_at(g_idx);
            let h = group.sub(g0, &g);
            f.blocks[group.index_of(&h)].transpose()
        })
        .collect();
    GradedMap::new(src, tgt, group.zero(), blocks)
}

/// The canonical evaluation `V -> (V^{g0})^{g0}`. In the canonical
/// dual-of-dual bases the evaluation is the identity matrix on every
/// degree, which makes naturality an exact matrix identity.
pub fn double_dual_iso(v: &GradedSpace, g0: &GroupElement) -> GradedMap {
    let dd = v.dual_g0(g0).dual_g0(g0);
    debug_assert_eq!(dd.dims, v.dims);
    let blocks = v.dims.iter().map(|&d| RationalMatrix::identity(d)).collect();
    GradedMap { source: v.clone(), target: dd, degree: v.group().zero(), blocks }
}

/// Dimension form of the two-parameter double dual:
/// `((V^{g0})^{g1})_g = V_{-g1 + g + g0}`.
pub fn double_dual_dims_check(v: &GradedSpace, g0: &GroupElement, g1: &GroupElement) -> bool {
    let group = v.group();
    let dd = v.dual_g0(g0).dual_g0(g1);
    group.all_elements().iter().all(|g| {
        let expected = v.dim_at(&group.add(&group.sub(g, g1), g0));
        dd.dim_at(g) == expected
    })
}

/// Currying `Hom_0(U (x) V, W) -> Hom_0(U, iHom(V, W))`: a pure reindexing
/// of block entries along `ft(x)(y) = f(x (x) y)`.
pub fn curry(f: &GradedMap, u: &GradedSpace, v: &GradedSpace) -> Result<GradedMap, GvectError> {
    let group = u.group().clone();
    if !f.degree.residues().iter().all(|&r| r == 0) {
        return Err(GvectError::SpaceMismatch);
    }
    if &u.tensor(v)? != f.source() {
        return Err(GvectError::SpaceMismatch);
    }
    let w = f.target().clone();
    let ihom = v.internal_hom(&w)?;
    let n = group.order() as usize;
    let mut blocks = Vec::with_capacity(n);
    for a_idx in 0..n {
        let a = group.element_at(a_idx);
        let mut m = RationalMatrix::zero(ihom.dims[a_idx], u.dims[a_idx]);
        for iu in 0..u.dims[a_idx] {
            for h_idx in 0..n {
                let h = group.element_at(h_idx);
                let d = group.add(&a, &h);
                let w_dim = w.dim_at(&d);
                let fblock = &f.blocks[group.index_of(&d)];
                for iv in 0..v.dims[h_idx] {
                    let col = u.tensor_basis_index(v, &d, &a, iu, iv);
                    for jw in 0..w_dim {
                        let val = fblock.get(jw, col).clone();
                        if !val.is_zero() {
                            let row = v.ihom_basis_index(&w, &a, &h, iv, jw);
                            m.set(row, iu, val);
                        }
                    }
                }
            }
        }
        blocks.push(m);
    }
    GradedMap::new(u.clone(), ihom, group.zero(), blocks)
}

/// Inverse of [`curry`]: `f(x (x) y) = ft(x)(y)`.
pub fn uncurry(
    ft: &GradedMap,
    v: &GradedSpace,
    w: &GradedSpace,
) -> Result<GradedMap, GvectError> {
    let group = v.group().clone();
    if !ft.degree.residues().iter().all(|&r| r == 0) {
        return Err(GvectError::SpaceMismatch);
    }
    if ft.target() != &v.internal_hom(w)? {
        return Err(GvectError::SpaceMismatch);
    }
    let u = ft.source().clone();
    let tensor = u.tensor(v)?;
    let n = group.order() as usize;
    let mut blocks = Vec::with_capacity(n);
    for d_idx in 0..n {
        let d = group.element_at(d_idx);
        let mut m = RationalMatrix::zero(w.dims[d_idx], tensor.dims[d_idx]);
        for a_idx in 0..n {
            let a = group.element_at(a_idx);
            let h = group.sub(&d, &a);
            let h_idx = group.index_of(&h);
            let ft_block = &ft.blocks[a_idx];
            for iu in 0..u.dims[a_idx] {
                for iv in 0..v.dims[h_idx] {
                    let col = u.tensor_basis_index(v, &d, &a, iu, iv);
                    for jw in 0..w.dims[d_idx] {
                        let row_ihom = v.ihom_basis_index(w, &a, &h, iv, jw);
                        let val = ft_block.get(row_ihom, iu).clone();
                        if !val.is_zero() {
                            m.set(jw, col, val);
                        }
                    }
                }
            }
        }
        blocks.push(m);
    }
    GradedMap::new(tensor, w.clone(), group.zero(), blocks)
}

/// Coordinates of a degree-zero map: blocks flattened in degree order,
/// each row-major.
pub fn flatten_map0(f: &GradedMap) -> Vec<BigRational> {
    let mut out = Vec::new();
    for b in &f.blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                out.push(b.get(i, j).clone());
            }
        }
    }
    out
}

/// Dimension of `Hom_0(A, B)`.
pub fn hom0_dim(a: &GradedSpace, b: &GradedSpace) -> usize {
    a.dims.iter().zip(&b.dims).map(|(x, y)| x * y).sum()
}

/// Rebuilds a degree-zero map from its coordinate vector.
pub fn unflatten_map0(
    a: &GradedSpace,
    b: &GradedSpace,
    coords: &[BigRational],
) -> Result<GradedMap, GvectError> {
    let n = a.group().order() as usize;
    let mut blocks = Vec::with_capacity(n);
    let mut pos = 0;
    for idx in 0..n {
        let rows = b.dims[idx];
        let cols = a.dims[idx];
        let mut m = RationalMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, coords[pos].clone());
                pos += 1;
            }
        }
        blocks.push(m);
    }
    GradedMap::new(a.clone(), b.clone(), a.group().zero(), blocks)
}

/// Mutually inverse matrices realizing
/// `Hom_0(x (x) y, k_{g0}) = Hom_0(x, y^{g0})` in the canonical hom-space
/// coordinates; both directions are permutation-like exact reindexings
/// obtained from currying against the internal hom.
#[derive(Clone, Debug)]
pub struct HomBijection {
    pub forward: RationalMatrix,
    pub backward: RationalMatrix,
}

pub fn star_adjunction_iso(
    x: &GradedSpace,
    y: &GradedSpace,
    g0: &GroupElement,
) -> Result<HomBijection, GvectError> {
    let group = x.group().clone();
    let unit_g0 = GradedSpace::simple(group.clone(), g0);
    let tensor = x.tensor(y)?;
    let dual = y.dual_g0(g0);
    // The degreewise dimensions of iHom(y, k_{g0}) and y^{g0} agree by
    // definition, so currying lands exactly in Hom_0(x, y^{g0}).
    debug_assert_eq!(y.internal_hom(&unit_g0)?.dims, dual.dims);

    let lhs_dim = hom0_dim(&tensor, &unit_g0);
    let rhs_dim = hom0_dim(x, &dual);
    assert_eq!(lhs_dim, rhs_dim, "adjunction hom spaces must have equal dimension");

    let mut forward = RationalMatrix::zero(rhs_dim, lhs_dim);
    for col in 0..lhs_dim {
        let mut coords = alloc::vec![BigRational::zero(); lhs_dim];
        coords[col] = BigRational::one();
        let f = unflatten_map0(&tensor, &unit_g0, &coords)?;
        let curried = curry(&f, x, y)?;
        for (row, val) in flatten_map0(&curried).into_iter().enumerate() {
            if !val.is_zero() {
                forward.set(row, col, val);
            }
        }
    }
    let mut backward = RationalMatrix::zero(lhs_dim, rhs_dim);
    for col in 0..rhs_dim {
        let mut coords = alloc::vec![BigRational::zero(); rhs_dim];
        coords[col] = BigRational::one();
        let ft = unflatten_map0(x, &dual, &coords)?;
        let f = uncurry(&ft, y, &unit_g0)?;
        for (row, val) in flatten_map0(&f).into_iter().enumerate() {
            if !val.is_zero() {
                backward.set(row, col, val);
            }
        }
    }
    Ok(HomBijection { forward, backward })
}

/// Seeded random graded space with per-degree dimensions `<= max_dim`.
pub fn random_space(rng: &mut impl Rng, group: &FinAbGroup, max_dim: usize) -> GradedSpace {
    let dims = (0..group.order()).map(|_| rng.gen_range(0..=max_dim)).collect();
    GradedSpace { group: group.clone(), dims }
}

/// Seeded random degree-zero map with small integer entries.
pub fn random_map0(rng: &mut impl Rng, a: &GradedSpace, b: &GradedSpace) -> GradedMap {
    let n = a.group().order() as usize;
    let blocks = (0..n)
        .map(|idx| {
            RationalMatrix::from_fn(b.dims[idx], a.dims[idx], |_, _| {
                BigRational::from_integer(rng.gen_range(-3i64..=3).into())
            })
        })
        .collect();
    GradedMap { source: a.clone(), target: b.clone(), degree: a.group().zero(), blocks }
}

/// Runs the graded-duality identity suite over seeded random spaces and
/// maps: dual reindexing, double-dual invertibility and naturality, tensor
/// convolution, the second-tensor shift, curry/uncurry round trips and the
/// star-autonomy adjunction. Deterministic for a fixed seed.
pub fn verify_identities(
    group: &FinAbGroup,
    seed: u64,
    max_dim: usize,
    samples: usize,
) -> Result<Vec<CheckResult>, GvectError> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut results = Vec::new();
    let fail = |name: &'static str, detail: String| CheckResult {
        name,
        pass: false,
        detail: Some(detail),
    };

    let mut dual_reindex = true;
    let mut double_dual = true;
    let mut tensor_conv = true;
    let mut shift = true;
    let mut curry_roundtrip = true;
    let mut adjunction = true;
    let mut naturality = true;
    let mut detail = String::new();

    for sample in 0..samples {
        let v = random_space(&mut rng, group, max_dim);
        let w = random_space(&mut rng, group, max_dim);
        let elements = group.all_elements();
        let g0 = &elements[(sample + seed as usize) % elements.len()];

        // (V^{g0})_g = V_{g0 - g}
        let dual = v.dual_g0(g0);
        for g in &elements {
            if dual.dim_at(g) != v.dim_at(&group.sub(g0, g)) {
                dual_reindex = false;
            }
        }
        if !double_dual_dims_check(&v, g0, g0) {
            dual_reindex = false;
        }

        // double dual: invertible and natural against a random map
        let iso_v = double_dual_iso(&v, g0);
        let iso_w = double_dual_iso(&w, g0);
        if !iso_v.is_invertible() {
            double_dual = false;
        }
        let f = random_map0(&mut rng, &v, &w);
        let ddf = dual_g0_map(&dual_g0_map(&f, g0)?, g0)?;
        let lhs = ddf.compose(&iso_v)?;
        let rhs = iso_w.compose(&f)?;
        if lhs.blocks() != rhs.blocks() {
            double_dual = false;
            naturality = false;
            detail = alloc::format!("double dual naturality failed at sample {sample}");
        }

        // tensor dims by convolution
        let t = v.tensor(&w)?;
        for g in &elements {
            let mut acc = 0;
            for h in &elements {
                acc += v.dim_at(h) * w.dim_at(&group.sub(g, h));
            }
            if t.dim_at(g) != acc {
                tensor_conv = false;
            }
        }

        // second tensor shift identity (asserted inside tensor_g0 too)
        let tg = v.tensor_g0(&w, g0)?;
        for g in &elements {
            if tg.dim_at(g) != t.dim_at(&group.add(g, g0)) {
                shift = false;
            }
        }

        // curry/uncurry round trip on a random map out of a tensor
        let u = random_space(&mut rng, group, max_dim);
        let uv = u.tensor(&v)?;
        let f = random_map0(&mut rng, &uv, &w);
        let ft = curry(&f, &u, &v)?;
        let back = uncurry(&ft, &v, &w)?;
        if back.blocks() != f.blocks() {
            curry_roundtrip = false;
        }
        let ft2 = curry(&uncurry(&ft, &v, &w)?, &u, &v)?;
        if ft2.blocks() != ft.blocks() {
            curry_roundtrip = false;
        }

        // star adjunction: explicit mutually inverse matrices
        let bij = star_adjunction_iso(&v, &w, g0)?;
        let n = bij.forward.rows();
        if bij.forward.mul(&bij.backward) != RationalMatrix::identity(n)
            || bij.backward.mul(&bij.forward) != RationalMatrix::identity(n)
        {
            adjunction = false;
        }
        // naturality in x: precomposition with a random u: x' -> x
        let xp = random_space(&mut rng, group, max_dim);
        let umap = random_map0(&mut rng, &xp, &v);
        let unit_g0 = GradedSpace::simple(group.clone(), g0);
        let tensor_xy = v.tensor(&w)?;
        let probe = random_map0(&mut rng, &tensor_xy, &unit_g0);
        let uid = umap.tensor_map(&GradedMap::identity(&w))?;
        let lhs = curry(&probe.compose(&uid)?, &xp, &w)?;
        let rhs = curry(&probe, &v, &w)?.compose(&umap)?;
        if lhs.blocks() != rhs.blocks() {
            naturality = false;
        }
    }

    results.push(CheckResult { name: "dual_reindexing", pass: dual_reindex, detail: None });
    results.push(if double_dual {
        CheckResult { name: "double_dual", pass: true, detail: None }
    } else {
        fail("double_dual", detail.clone())
    });
    results.push(CheckResult { name: "tensor_convolution", pass: tensor_conv, detail: None });
    results.push(CheckResult { name: "tensor_g0_shift", pass: shift, detail: None });
    results.push(CheckResult { name: "curry_uncurry_roundtrip", pass: curry_roundtrip, detail: None });
    results.push(CheckResult { name: "star_adjunction", pass: adjunction, detail: None });
    results.push(CheckResult { name: "naturality", pass: naturality, detail: None });
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn z(n: i64) -> FinAbGroup {
        FinAbGroup::cyclic(n)
    }

    fn space(group: &FinAbGroup, dims: &[usize]) -> GradedSpace {
        GradedSpace::new(group.clone(), dims.to_vec()).unwrap()
    }

    #[test]
    fn simples_tensor_to_simples() {
        let g = z(4);
        for a in g.all_elements() {
            for b in g.all_elements() {
                let t = GradedSpace::simple(g.clone(), &a).tensor(&GradedSpace::simple(g.clone(), &b)).unwrap();
                assert_eq!(t, GradedSpace::simple(g.clone(), &g.add(&a, &b)));
            }
        }
    }

    #[test]
    fn unit_is_tensor_neutral() {
        let g = z(3);
        let v = space(&g, &[2, 1, 3]);
        assert_eq!(v.tensor(&GradedSpace::unit(g.clone())).unwrap().dims(), v.dims());
    }

    #[test]
    fn tensor_convolution_example() {
        // Z2: dims (2,3) x (1,1) -> (5,5)
        let g = z(2);
        let v = space(&g, &[2, 3]);
        let w = space(&g, &[1, 1]);
        assert_eq!(v.tensor(&w).unwrap().dims(), &[5, 5]);
    }

    #[test]
    fn dual_reindexes() {
        let g = z(2);
        let v = space(&g, &[2, 3]);
        let one = g.element(&[1]).unwrap();
        assert_eq!(v.dual_g0(&one).dims(), &[3, 2]);

        // (k_g)^{g0} = k_{g0 - g}
        let g4 = z(4);
        for a in g4.all_elements() {
            for g0 in g4.all_elements() {
                let d = GradedSpace::simple(g4.clone(), &a).dual_g0(&g0);
                assert_eq!(d, GradedSpace::simple(g4.clone(), &g4.sub(&g0, &a)));
            }
        }
    }

    #[test]
    fn dual_of_identity_is_identity() {
        let g = z(3);
        let v = space(&g, &[1, 2, 0]);
        let id = GradedMap::identity(&v);
        for g0 in g.all_elements() {
            let d = dual_g0_map(&id, &g0).unwrap();
            assert!(d.is_invertible());
            for b in d.blocks() {
                assert_eq!(b, &RationalMatrix::identity(b.rows()));
            }
        }
    }

    #[test]
    fn dual_map_is_contravariant() {
        use rand::SeedableRng;
        let g = z(3);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let a = random_space(&mut rng, &g, 2);
        let b = random_space(&mut rng, &g, 2);
        let c = random_space(&mut rng, &g, 2);
        let f = random_map0(&mut rng, &a, &b);
        let h = random_map0(&mut rng, &b, &c);
        let g0 = g.element(&[1]).unwrap();
        let lhs = dual_g0_map(&h.compose(&f).unwrap(), &g0).unwrap();
        let rhs = dual_g0_map(&f, &g0).unwrap().compose(&dual_g0_map(&h, &g0).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn double_dual_on_unit() {
        let g = z(2);
        let v = GradedSpace::unit(g.clone());
        for g0 in g.all_elements() {
            let iso = double_dual_iso(&v, &g0);
            assert!(iso.is_invertible());
            assert_eq!(iso.target().dims(), v.dims());
        }
        let one = g.element(&[1]).unwrap();
        let v = space(&g, &[2, 3]);
        let iso = double_dual_iso(&v, &one);
        assert_eq!(iso.target().dims(), &[2, 3]);
        assert!(iso.is_invertible());
    }

    #[test]
    fn internal_hom_dims() {
        let g = z(4);
        // iHom(k_h, k_g) = k_{g - h}
        for a in g.all_elements() {
            for b in g.all_elements() {
                let h = GradedSpace::simple(g.clone(), &a).internal_hom(&GradedSpace::simple(g.clone(), &b)).unwrap();
                assert_eq!(h, GradedSpace::simple(g.clone(), &g.sub(&b, &a)));
            }
        }
        // iHom(V, k_{g0}) has the duality dimensions.
        let v = space(&g, &[1, 2, 0, 3]);
        for g0 in g.all_elements() {
            let h = v.internal_hom(&GradedSpace::simple(g.clone(), &g0)).unwrap();
            assert_eq!(h.dims(), v.dual_g0(&g0).dims());
        }
    }

    #[test]
    fn tensor_g0_examples() {
        let g = z(2);
        let v = space(&g, &[1, 1]);
        // g0 = 0 reduces to the plain tensor product.
        let zero = g.zero();
        assert_eq!(v.tensor_g0(&v, &zero).unwrap().dims(), v.tensor(&v).unwrap().dims());
        // dims (1,1) x (1,1) with g0 = 1: convolution (2,2) shifted by 1.
        let one = g.element(&[1]).unwrap();
        assert_eq!(v.tensor_g0(&v, &one).unwrap().dims(), &[2, 2]);

        // Simples shift: k_a (x)_{g0} k_b = k_{a + b - g0}.
        let g4 = z(4);
        for a in g4.all_elements() {
            for b in g4.all_elements() {
                for g0 in g4.all_elements() {
                    let t = GradedSpace::simple(g4.clone(), &a)
                        .tensor_g0(&GradedSpace::simple(g4.clone(), &b), &g0)
                        .unwrap();
                    let expect = g4.sub(&g4.add(&a, &b), &g0);
                    assert_eq!(t, GradedSpace::simple(g4.clone(), &expect));
                }
            }
        }
    }

    #[test]
    fn curry_uncurry_exact_roundtrip() {
        use rand::SeedableRng;
        let g = z(4);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..5 {
            let u = random_space(&mut rng, &g, 2);
            let v = random_space(&mut rng, &g, 2);
            let w = random_space(&mut rng, &g, 2);
            let uv = u.tensor(&v).unwrap();
            let f = random_map0(&mut rng, &uv, &w);
            let ft = curry(&f, &u, &v).unwrap();
            assert_eq!(uncurry(&ft, &v, &w).unwrap().blocks(), f.blocks());
        }
    }

    #[test]
    fn adjunction_simple_degrees() {
        let g = z(4);
        // x = k_a, y = k_b: both hom spaces are 1-dimensional iff
        // a + b = g0, else 0-dimensional.
        for a in g.all_elements() {
            for b in g.all_elements() {
                for g0 in g.all_elements() {
                    let x = GradedSpace::simple(g.clone(), &a);
                    let y = GradedSpace::simple(g.clone(), &b);
                    let lhs = hom0_dim(&x.tensor(&y).unwrap(), &GradedSpace::simple(g.clone(), &g0));
                    let rhs = hom0_dim(&x, &y.dual_g0(&g0));
                    assert_eq!(lhs, rhs);
                    let expected = usize::from(g.add(&a, &b) == g0);
                    assert_eq!(lhs, expected);
                    let bij = star_adjunction_iso(&x, &y, &g0).unwrap();
                    assert_eq!(bij.forward.rows(), expected);
                }
            }
        }
    }

    #[test]
    fn verify_suite_passes() {
        for g in [z(2), z(4), FinAbGroup::new(vec![2, 3]).unwrap()] {
            let results = verify_identities(&g, 42, 3, 4).unwrap();
            for r in &results {
                assert!(r.pass, "check {} failed: {:?}", r.name, r.detail);
            }
        }
    }

    #[test]
    fn verify_is_deterministic() {
        let g = z(4);
        let a = verify_identities(&g, 9, 3, 3).unwrap();
        let b = verify_identities(&g, 9, 3, 3).unwrap();
        let line = |rs: &[CheckResult]| -> Vec<(String, bool)> {
            rs.iter().map(|r| (String::from(r.name), r.pass)).collect::<Vec<_>>()
        };
        assert_eq!(line(&a), line(&b));
    }
}
