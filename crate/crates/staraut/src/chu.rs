//! Finite-dimensional Chu pairs `(V, W, <-,->)`: separation and
//! extensionality, the involutive duality, morphism spaces, the internal
//! hom and the induced tensor product, together with the star-autonomy
//! isomorphisms certified by explicit invertible morphisms.
//!
//! At finite dimension a separated and extensional pair forces the pairing
//! matrix to be square and nondegenerate, so the morphism space
//! `Hom((V1,W1), (V2,W2))` is parameterized by the `f`-component alone:
//! `g = M1^-1 f^T M2` is the unique adjoint. The generic kernel-based
//! solver for the raw adjointness system lives in the test suite as an
//! independent oracle for this parameterization.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use crate::exact::RationalMatrix;
use crate::CheckResult;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChuError {
    /// Matrix shapes do not match the declared dimensions.
    ShapeMismatch,
    /// An operation needs a separated and extensional pair.
    NotValid,
    /// `<f(v), w> = <v, g(w)>` fails as a matrix identity.
    AdjointnessFailed,
    /// An internal-hom output failed its validity postcondition; this
    /// indicates an implementation fault, not bad input.
    InternalHomInvalid,
}

impl fmt::Display for ChuError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChuError::ShapeMismatch => write!(f, "matrix shape mismatch"),
            ChuError::NotValid => write!(f, "pair is not separated and extensional"),
            ChuError::AdjointnessFailed => write!(f, "morphism fails the adjointness identity"),
            ChuError::InternalHomInvalid => {
                write!(f, "internal hom output is not separated and extensional")
            }
        }
    }
}

/// A pair `(V, W, <-,->)` given by its pairing matrix of shape
/// `dim V x dim W`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChuPair {
    pairing: RationalMatrix,
}

impl ChuPair {
    pub fn new(pairing: RationalMatrix) -> Self {
        ChuPair { pairing }
    }

    /// The unit pair `(k, k, *)`.
    pub fn unit() -> Self {
        ChuPair { pairing: RationalMatrix::identity(1) }
    }

    pub fn dim_v(&self) -> usize {
        self.pairing.rows()
    }

    pub fn dim_w(&self) -> usize {
        self.pairing.cols()
    }

    pub fn pairing(&self) -> &RationalMatrix {
        &self.pairing
    }

    /// Separated: `V -> W^*` injective, i.e. the rows are independent.
    pub fn is_separated(&self) -> bool {
        self.pairing.rank() == self.dim_v()
    }

    /// Extensional: `W -> V^*` injective, i.e. the columns are independent.
    pub fn is_extensional(&self) -> bool {
        self.pairing.rank() == self.dim_w()
    }

    pub fn is_valid(&self) -> bool {
        self.is_separated() && self.is_extensional()
    }

    /// The dual pair `(W, V, <-,-> . tau)`: swap roles, transpose the
    /// pairing. An exact involution.
    pub fn dual(&self) -> ChuPair {
        ChuPair { pairing: self.pairing.transpose() }
    }
}

/// A morphism of pairs `(f, g)` with `f: V1 -> V2`, `g: W2 -> W1` and
/// `<f(v), w>_2 = <v, g(w)>_1`, stored as matrices of shapes
/// `dimV2 x dimV1` and `dimW1 x dimW2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChuMorphism {
    f: RationalMatrix,
    g: RationalMatrix,
}

impl ChuMorphism {
    /// Validates shapes and the exact adjointness identity
    /// `f^T M2 = M1 g`.
    pub fn new(
        source: &ChuPair,
        target: &ChuPair,
        f: RationalMatrix,
        g: RationalMatrix,
    ) -> Result<Self, ChuError> {
        if f.rows() != target.dim_v()
            || f.cols() != source.dim_v()
            || g.rows() != source.dim_w()
            || g.cols() != target.dim_w()
        {
            return Err(ChuError::ShapeMismatch);
        }
        if f.transpose().mul(target.pairing()) != source.pairing().mul(&g) {
            return Err(ChuError::AdjointnessFailed);
        }
        Ok(ChuMorphism { f, g })
    }

    /// The unique morphism with the given `f`-component between valid
    /// pairs: `g = M1^-1 f^T M2`.
    pub fn from_f(source: &ChuPair, target: &ChuPair, f: RationalMatrix) -> Result<Self, ChuError> {
        let inv = source.pairing().inverse().ok_or(ChuError::NotValid)?;
        let g = inv.mul(&f.transpose()).mul(target.pairing());
        Self::new(source, target, f, g)
    }

    pub fn identity(p: &ChuPair) -> Self {
        ChuMorphism {
            f: RationalMatrix::identity(p.dim_v()),
            g: RationalMatrix::identity(p.dim_w()),
        }
    }

    pub fn f(&self) -> &RationalMatrix {
        &self.f
    }

    pub fn g(&self) -> &RationalMatrix {
        &self.g
    }

    /// `self` after `other`: `(f2 f1, g1 g2)`.
    pub fn compose(&self, other: &ChuMorphism) -> ChuMorphism {
        ChuMorphism { f: self.f.mul(&other.f), g: other.g.mul(&self.g) }
    }

    /// `(f, g)^* = (g, f)`, a morphism between the dual pairs.
    pub fn dual(&self) -> ChuMorphism {
        ChuMorphism { f: self.g.clone(), g: self.f.clone() }
    }

    pub fn is_invertible(&self) -> bool {
        self.f.is_invertible() && self.g.is_invertible()
    }
}

/// Canonical basis of `Hom(p1, p2)` for valid pairs: the elementary
/// `f`-components `E_{j,i}` in lexicographic `(i, j)` order (`i` over the
/// source, `j` over the target); `g` is reconstructed per basis element.
pub fn hom_space(p1: &ChuPair, p2: &ChuPair) -> Result<Vec<ChuMorphism>, ChuError> {
    if !p1.is_valid() || !p2.is_valid() {
        return Err(ChuError::NotValid);
    }
    let inv = p1.pairing().inverse().ok_or(ChuError::NotValid)?;
    let mut out = Vec::with_capacity(p1.dim_v() * p2.dim_v());
    for i in 0..p1.dim_v() {
        for j in 0..p2.dim_v() {
            let mut f = RationalMatrix::zero(p2.dim_v(), p1.dim_v());
            f.set(j, i, BigRational::from_integer(1.into()));
            let g = inv.mul(&f.transpose()).mul(p2.pairing());
            out.push(ChuMorphism { f, g });
        }
    }
    Ok(out)
}

/// Dimension of `Hom(p1, p2)` under the `f`-parameterization.
pub fn hom_dim(p1: &ChuPair, p2: &ChuPair) -> usize {
    p1.dim_v() * p2.dim_v()
}

/// Coordinates of a morphism in the canonical hom basis.
fn hom_coords(p1: &ChuPair, p2: &ChuPair, m: &ChuMorphism) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(hom_dim(p1, p2));
    for i in 0..p1.dim_v() {
        for j in 0..p2.dim_v() {
            out.push(m.f.get(j, i).clone());
        }
    }
    out
}

/// Morphism from canonical hom coordinates.
fn hom_from_coords(
    p1: &ChuPair,
    p2: &ChuPair,
    coords: &[BigRational],
) -> Result<ChuMorphism, ChuError> {
    let mut f = RationalMatrix::zero(p2.dim_v(), p1.dim_v());
    for i in 0..p1.dim_v() {
        for j in 0..p2.dim_v() {
            f.set(j, i, coords[i * p2.dim_v() + j].clone());
        }
    }
    ChuMorphism::from_f(p1, p2, f)
}

/// The internal hom pair
/// `(Hom(p1, p2), V1 (x) W2, <(f,g), v (x) w> = <f(v), w>_2)`, with the
/// pairing matrix assembled against the canonical hom basis and the
/// Kronecker basis of `V1 (x) W2`. The output is checked to be separated
/// and extensional, as the construction guarantees.
pub fn internal_hom(p1: &ChuPair, p2: &ChuPair) -> Result<ChuPair, ChuError> {
    let basis = hom_space(p1, p2)?;
    let rows = basis.len();
    let cols = p1.dim_v() * p2.dim_w();
    let mut pairing = RationalMatrix::zero(rows, cols);
    for (b, m) in basis.iter().enumerate() {
        // <(f,g), v_i (x) w_j> = (f^T M2)[i][j]
        let ft_m2 = m.f.transpose().mul(p2.pairing());
        for i in 0..p1.dim_v() {
            for j in 0..p2.dim_w() {
                let v = ft_m2.get(i, j).clone();
                if !v.is_zero() {
                    pairing.set(b, i * p2.dim_w() + j, v);
                }
            }
        }
    }
    let out = ChuPair::new(pairing);
    if !out.is_valid() {
        return Err(ChuError::InternalHomInvalid);
    }
    Ok(out)
}

/// The induced tensor product `p1 (x) p2 = Hom(p1, p2^*)^*`, computed
/// literally by that composition.
pub fn tensor(p1: &ChuPair, p2: &ChuPair) -> Result<ChuPair, ChuError> {
    Ok(internal_hom(p1, &p2.dual())?.dual())
}

/// Functorial action of the internal hom: contravariant in the first
/// argument, covariant in the second. `m1: A' -> A`, `m2: B -> B'` induce
/// `iHom(A, B) -> iHom(A', B')` with `f`-component `h -> m2 . h . m1` and
/// `g`-component the Kronecker product `f_{m1} (x) g_{m2}`.
pub fn internal_hom_map(
    a_from: &ChuPair,
    a_to: &ChuPair,
    b_from: &ChuPair,
    b_to: &ChuPair,
    m1: &ChuMorphism,
    m2: &ChuMorphism,
) -> Result<ChuMorphism, ChuError> {
    let src = internal_hom(a_from, b_from)?;
    let tgt = internal_hom(a_to, b_to)?;
    let basis = hom_space(a_from, b_from)?;
    let mut f = RationalMatrix::zero(tgt.dim_v(), src.dim_v());
    for (col, h) in basis.iter().enumerate() {
        let image = m2.compose(&h.compose(m1));
        for (row, c) in hom_coords(a_to, b_to, &image).into_iter().enumerate() {
            if !c.is_zero() {
                f.set(row, col, c);
            }
        }
    }
    let g = m1.f.kron(&m2.g);
    ChuMorphism::new(&src, &tgt, f, g)
}

/// Explicit invertible morphism `iHom(V, W) ~ iHom(W^*, V^*)`:
/// `(f, g) -> (g, f)` on the hom side and the Kronecker swap on the
/// tensor side.
pub fn duality_swap_iso(v: &ChuPair, w: &ChuPair) -> Result<ChuMorphism, ChuError> {
    let lhs = internal_hom(v, w)?;
    let rhs = internal_hom(&w.dual(), &v.dual())?;
    let basis = hom_space(v, w)?;
    let mut f = RationalMatrix::zero(rhs.dim_v(), lhs.dim_v());
    for (col, m) in basis.iter().enumerate() {
        let swapped = m.dual();
        for (row, c) in hom_coords(&w.dual(), &v.dual(), &swapped).into_iter().enumerate() {
            if !c.is_zero() {
                f.set(row, col, c);
            }
        }
    }
    // W-sides: rhs.W = W.W (x) V.V  ->  lhs.W = V.V (x) W.W, factor swap.
    let (dv, dw) = (v.dim_v(), w.dim_w());
    let mut g = RationalMatrix::zero(dv * dw, dw * dv);
    for i in 0..dv {
        for j in 0..dw {
            g.set(i * dw + j, j * dv + i, BigRational::from_integer(1.into()));
        }
    }
    let iso = ChuMorphism::new(&lhs, &rhs, f, g)?;
    if !iso.is_invertible() {
        return Err(ChuError::InternalHomInvalid);
    }
    Ok(iso)
}

/// Explicit invertible morphism `V^* ~ iHom(V, k)`: the hom component is
/// the pairing matrix itself, the tensor component the identity.
pub fn dual_as_hom_iso(v: &ChuPair) -> Result<ChuMorphism, ChuError> {
    let rhs = internal_hom(v, &ChuPair::unit())?;
    let f = v.pairing().clone();
    let g = RationalMatrix::identity(v.dim_v());
    let iso = ChuMorphism::new(&v.dual(), &rhs, f, g)?;
    if !iso.is_invertible() {
        return Err(ChuError::InternalHomInvalid);
    }
    Ok(iso)
}

/// Explicit invertible morphism
/// `iHom(U, iHom(V, W)) ~ iHom(V, iHom(U, W))`, the argument swap. Both
/// components are permutation matrices in the canonical bases.
pub fn argument_swap_iso(
    u: &ChuPair,
    v: &ChuPair,
    w: &ChuPair,
) -> Result<ChuMorphism, ChuError> {
    let x = internal_hom(v, w)?;
    let y = internal_hom(u, w)?;
    let lhs = internal_hom(u, &x)?;
    let rhs = internal_hom(v, &y)?;
    let (du, dv, dw) = (u.dim_v(), v.dim_v(), w.dim_v());
    let one = || BigRational::from_integer(1.into());

    // Coordinates of Hom(U, X): (i_u, k, l) with k over V.V, l over W.V.
    // The swap sends them to (k, i_u, l) in Hom(V, Y).
    let mut f = RationalMatrix::zero(rhs.dim_v(), lhs.dim_v());
    for iu in 0..du {
        for k in 0..dv {
            for l in 0..dw {
                let col = iu * (dv * dw) + k * dw + l;
                let row = k * (du * dw) + iu * dw + l;
                f.set(row, col, one());
            }
        }
    }
    // W-sides: rhs.W = V.V (x) (U.V (x) W.W) -> lhs.W = U.V (x) (V.V (x) W.W).
    let dww = w.dim_w();
    let mut g = RationalMatrix::zero(du * dv * dww, dv * du * dww);
    for iu in 0..du {
        for k in 0..dv {
            for jw in 0..dww {
                let row = iu * (dv * dww) + k * dww + jw;
                let col = k * (du * dww) + iu * dww + jw;
                g.set(row, col, one());
            }
        }
    }
    let iso = ChuMorphism::new(&lhs, &rhs, f, g)?;
    if !iso.is_invertible() {
        return Err(ChuError::InternalHomInvalid);
    }
    Ok(iso)
}

/// Explicit invertible morphism `p (x) k ~ p` (and by symmetry the other
/// unit law): in the canonical bases both components are identities up to
/// the pairing.
pub fn tensor_unit_iso(p: &ChuPair) -> Result<ChuMorphism, ChuError> {
    let t = tensor(&ChuPair::unit(), p)?;
    let f = RationalMatrix::identity(p.dim_v());
    let g = RationalMatrix::identity(p.dim_w());
    let iso = ChuMorphism::new(&t, p, f, g)?;
    if !iso.is_invertible() {
        return Err(ChuError::InternalHomInvalid);
    }
    Ok(iso)
}

/// Explicit invertible morphism `tensor(U, V) ~ tensor(V, U)`, obtained by
/// dualizing the hom-side swap `iHom(V, U^*) ~ iHom(U, V^*)`.
pub fn tensor_symmetry_iso(u: &ChuPair, v: &ChuPair) -> Result<ChuMorphism, ChuError> {
    // duality_swap_iso(V, U^*): iHom(V, U^*) ~ iHom(U, V^*); dualizing
    // reverses it into tensor(U, V) = iHom(U, V^*)^* ~ iHom(V, U^*)^* =
    // tensor(V, U).
    let swap = duality_swap_iso(v, &u.dual())?;
    let iso = swap.dual();
    let src = tensor(u, v)?;
    let tgt = tensor(v, u)?;
    let iso = ChuMorphism::new(&src, &tgt, iso.f, iso.g)?;
    if !iso.is_invertible() {
        return Err(ChuError::InternalHomInvalid);
    }
    Ok(iso)
}

/// Explicit invertible morphism
/// `(U (x) V) (x) W ~ U (x) (V (x) W)`, built from the adjunction chain:
/// in the canonical Kronecker and hom bases both bracketings carry the
/// same flattened index order, so both components are identities — but the
/// adjointness identity between the two assembled pairings is validated
/// rather than assumed.
pub fn tensor_associator_iso(
    u: &ChuPair,
    v: &ChuPair,
    w: &ChuPair,
) -> Result<ChuMorphism, ChuError> {
    let lhs = tensor(&tensor(u, v)?, w)?;
    let rhs = tensor(u, &tensor(v, w)?)?;
    if (lhs.dim_v(), lhs.dim_w()) != (rhs.dim_v(), rhs.dim_w()) {
        return Err(ChuError::ShapeMismatch);
    }
    let iso = ChuMorphism::new(
        &lhs,
        &rhs,
        RationalMatrix::identity(lhs.dim_v()),
        RationalMatrix::identity(lhs.dim_w()),
    )?;
    if !iso.is_invertible() {
        return Err(ChuError::InternalHomInvalid);
    }
    Ok(iso)
}

/// The adjunction reshape `Hom(U (x) V, W) ~ Hom(U, iHom(V, W))` as a pair
/// of mutually inverse coordinate matrices.
pub struct AdjunctionBijection {
    pub forward: RationalMatrix,
    pub backward: RationalMatrix,
}

pub fn tensor_hom_adjunction(
    u: &ChuPair,
    v: &ChuPair,
    w: &ChuPair,
) -> Result<AdjunctionBijection, ChuError> {
    let uv = tensor(u, v)?;
    let vw = internal_hom(v, w)?;
    let lhs_dim = hom_dim(&uv, w);
    let rhs_dim = hom_dim(u, &vw);
    if lhs_dim != rhs_dim {
        return Err(ChuError::ShapeMismatch);
    }
    let (du, dv, dw) = (u.dim_v(), v.dim_v(), w.dim_v());
    // (U (x) V).V carries the Kronecker basis (i_u, i_v); a morphism
    // coordinate in Hom(U (x) V, W) is ((i_u, i_v), l); currying sends it
    // to (i_u, (i_v, l)).
    let one = || BigRational::from_integer(1.into());
    let mut forward = RationalMatrix::zero(rhs_dim, lhs_dim);
    for iu in 0..du {
        for iv in 0..dv {
            for l in 0..dw {
                let col = (iu * dv + iv) * dw + l;
                let row = iu * (dv * dw) + iv * dw + l;
                forward.set(row, col, one());
            }
        }
    }
    let backward = forward.transpose();
    Ok(AdjunctionBijection { forward, backward })
}

/// Seeded random valid pair: a square nondegenerate pairing with small
/// integer entries (dimension in `1..=max_dim`).
pub fn random_valid_pair(rng: &mut impl Rng, max_dim: usize) -> ChuPair {
    loop {
        let d = rng.gen_range(1..=max_dim);
        let m = RationalMatrix::from_fn(d, d, |_, _| {
            BigRational::from_integer(rng.gen_range(-3i64..=3).into())
        });
        let p = ChuPair::new(m);
        if p.is_valid() {
            return p;
        }
    }
}

/// Seeded random morphism between valid pairs.
pub fn random_morphism(
    rng: &mut impl Rng,
    source: &ChuPair,
    target: &ChuPair,
) -> Result<ChuMorphism, ChuError> {
    let f = RationalMatrix::from_fn(target.dim_v(), source.dim_v(), |_, _| {
        BigRational::from_integer(rng.gen_range(-2i64..=2).into())
    });
    ChuMorphism::from_f(source, target, f)
}

/// Runs the star-autonomy identity suite on a triple of valid pairs:
/// dual involution, internal-hom validity, the four hom identities, the
/// unit law, tensor symmetry and the tensor-hom adjunction with a
/// naturality spot check. Each identity is certified by an explicit
/// invertible morphism or a round-tripping coordinate bijection.
pub fn verify_identities(
    pu: &ChuPair,
    pv: &ChuPair,
    pw: &ChuPair,
    rng: &mut impl Rng,
) -> Result<Vec<CheckResult>, ChuError> {
    let mut results = Vec::new();
    let mut push = |name: &'static str, pass: bool, detail: Option<String>| {
        results.push(CheckResult { name, pass, detail });
    };

    for p in [pu, pv, pw] {
        if !p.is_valid() {
            return Err(ChuError::NotValid);
        }
    }

    // Dual is an exact involution on pairs and morphisms.
    let mut involution = [pu, pv, pw].iter().all(|p| &p.dual().dual() == *p);
    let m = random_morphism(rng, pu, pv)?;
    involution &= m.dual().dual() == m;
    // and the dual of a morphism is a valid morphism between the duals
    involution &=
        ChuMorphism::new(&pv.dual(), &pu.dual(), m.g().clone(), m.f().clone()).is_ok();
    push("dual_involution", involution, None);

    // Internal hom outputs are separated and extensional (errors if not).
    let mut hom_valid = true;
    for a in [pu, pv, pw] {
        for b in [pu, pv, pw] {
            hom_valid &= internal_hom(a, b).is_ok();
        }
    }
    push("internal_hom_valid", hom_valid, None);

    // Hom(k, iHom(V, W)) = Hom(V, W): evaluation at 1 is a linear
    // bijection of hom spaces.
    let unit = ChuPair::unit();
    let vw = internal_hom(pv, pw)?;
    let from_unit = hom_space(&unit, &vw)?;
    let mut eval_ok = from_unit.len() == hom_dim(pv, pw);
    let basis_vw = hom_space(pv, pw)?;
    for m in &from_unit {
        // f: k -> Hom(V, W) coordinates; the image morphism must satisfy
        // the adjointness identity for (V, W).
        let coords: Vec<BigRational> = (0..vw.dim_v()).map(|r| m.f.get(r, 0).clone()).collect();
        let image = hom_from_coords(pv, pw, &coords);
        eval_ok &= image.is_ok();
        if let Ok(image) = image {
            // round trip through the basis
            let back = hom_coords(pv, pw, &image);
            eval_ok &= back == coords;
        }
    }
    eval_ok &= basis_vw.len() == from_unit.len();
    push("hom_unit_eval", eval_ok, None);

    // iHom(U, iHom(V, W)) ~ iHom(V, iHom(U, W)).
    let swap = argument_swap_iso(pu, pv, pw);
    push("argument_swap", swap.is_ok(), swap.err().map(|e| alloc::format!("{e}")));

    // iHom(V, W) ~ iHom(W^*, V^*).
    let dswap = duality_swap_iso(pv, pw);
    push("duality_swap", dswap.is_ok(), dswap.err().map(|e| alloc::format!("{e}")));

    // V^* ~ iHom(V, k).
    let dual_hom = dual_as_hom_iso(pv);
    push("dual_as_hom", dual_hom.is_ok(), dual_hom.err().map(|e| alloc::format!("{e}")));

    // k (x) p ~ p.
    let unit_law = tensor_unit_iso(pv);
    push("tensor_unit", unit_law.is_ok(), unit_law.err().map(|e| alloc::format!("{e}")));

    // tensor symmetry with an explicit iso.
    let sym = tensor_symmetry_iso(pu, pv);
    push("tensor_symmetry", sym.is_ok(), sym.err().map(|e| alloc::format!("{e}")));

    // associator from the adjunction chain.
    let assoc = tensor_associator_iso(pu, pv, pw);
    push("tensor_associator", assoc.is_ok(), assoc.err().map(|e| alloc::format!("{e}")));

    // Adjunction: dimensions, exact round trip, naturality spot check.
    let adj = tensor_hom_adjunction(pu, pv, pw)?;
    let n = adj.forward.rows();
    let mut adj_ok = adj.forward.mul(&adj.backward) == RationalMatrix::identity(n)
        && adj.backward.mul(&adj.forward) == RationalMatrix::identity(n);
    // Forward must send morphisms to morphisms: check on a random one.
    let uv = tensor(pu, pv)?;
    let vw = internal_hom(pv, pw)?;
    let m = random_morphism(rng, &uv, pw)?;
    let image = hom_from_coords(pu, &vw, &adj.forward.mul_vec(&hom_coords(&uv, pw, &m)));
    adj_ok &= image.is_ok();
    // Naturality in W: postcomposition commutes with the bijection.
    let m2 = random_morphism(rng, pw, pw)?;
    let post = m2.compose(&m);
    let lhs = adj.forward.mul_vec(&hom_coords(&uv, pw, &post));
    let ihom_post = internal_hom_map(pv, pv, pw, pw, &ChuMorphism::identity(pv), &m2)?;
    let mid = hom_from_coords(pu, &vw, &adj.forward.mul_vec(&hom_coords(&uv, pw, &m)))
        .map(|im| ihom_post.compose(&im));
    let rhs = mid.map(|im| hom_coords(pu, &vw, &im));
    adj_ok &= rhs.map(|r| r == lhs).unwrap_or(false);
    push("tensor_hom_adjunction", adj_ok, None);

    // Functoriality of the internal hom on random morphisms.
    let m1 = random_morphism(rng, pu, pv)?;
    let m2 = random_morphism(rng, pv, pw)?;
    let functorial = internal_hom_map(pv, pu, pv, pw, &m1, &m2).is_ok();
    push("internal_hom_functorial", functorial, None);

    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn pair(rows: &[&[i64]]) -> ChuPair {
        ChuPair::new(RationalMatrix::from_i64_rows(rows))
    }

    #[test]
    fn validity_examples() {
        assert!(pair(&[&[1, 0], &[0, 1]]).is_valid());
        // zero row: not separated
        let p = pair(&[&[0, 0], &[0, 1]]);
        assert!(!p.is_separated());
        // 3x2 with dependent rows: not separated even though extensional
        let p = pair(&[&[1, 0], &[0, 0], &[0, 1]]);
        assert!(p.is_extensional());
        assert!(!p.is_separated());
        assert!(!p.is_valid());
    }

    #[test]
    fn dual_involution() {
        let p = pair(&[&[1, 2], &[0, 1]]);
        assert_eq!(p.dual().dual(), p);
        assert_eq!(ChuPair::unit().dual(), ChuPair::unit());
    }

    #[test]
    fn hom_space_dimensions() {
        let unit = ChuPair::unit();
        assert_eq!(hom_space(&unit, &unit).unwrap().len(), 1);
        let p = pair(&[&[1, 0], &[0, 1]]);
        assert_eq!(hom_space(&p, &p).unwrap().len(), 4);
        // Hom(p, unit) has dimension dim W = dim V for identity pairing.
        assert_eq!(hom_space(&p, &unit).unwrap().len(), p.dim_v());
    }

    #[test]
    fn hom_space_matches_kernel_oracle() {
        // Independent oracle: solve the raw adjointness system
        // f^T M2 - M1 g = 0 by a kernel computation over all entries of
        // (f, g) and compare dimensions.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..6 {
            let p1 = random_valid_pair(&mut rng, 3);
            let p2 = random_valid_pair(&mut rng, 3);
            let (v1, w1) = (p1.dim_v(), p1.dim_w());
            let (v2, w2) = (p2.dim_v(), p2.dim_w());
            let unknowns = v2 * v1 + w1 * w2;
            let mut system = RationalMatrix::zero(v1 * w2, unknowns);
            for i in 0..v1 {
                for j in 0..w2 {
                    let row = i * w2 + j;
                    // (f^T M2)[i][j] = sum_k f[k][i] M2[k][j]
                    for k in 0..v2 {
                        system.set(row, k * v1 + i, p2.pairing().get(k, j).clone());
                    }
                    // -(M1 g)[i][j] = -sum_l M1[i][l] g[l][j]
                    for l in 0..w1 {
                        let v = -p1.pairing().get(i, l).clone();
                        system.set(row, v2 * v1 + l * w2 + j, v);
                    }
                }
            }
            let oracle_dim = system.kernel().len();
            assert_eq!(oracle_dim, hom_space(&p1, &p2).unwrap().len());
        }
    }

    #[test]
    fn internal_hom_examples() {
        let unit = ChuPair::unit();
        let p = pair(&[&[1, 0], &[0, 1]]);
        // iHom(unit, p) has p's dimensions and a nondegenerate pairing.
        let h = internal_hom(&unit, &p).unwrap();
        assert_eq!((h.dim_v(), h.dim_w()), (p.dim_v(), p.dim_w()));
        assert!(h.is_valid());
        // iHom(p, unit) realizes the dual.
        let h = internal_hom(&p, &unit).unwrap();
        assert_eq!((h.dim_v(), h.dim_w()), (p.dim_w(), p.dim_v()));
        // identity-pairing dim 2: 4-dim vs 4-dim with nondegenerate pairing
        let h = internal_hom(&p, &p).unwrap();
        assert_eq!((h.dim_v(), h.dim_w()), (4, 4));
        assert!(h.is_valid());
    }

    #[test]
    fn tensor_examples() {
        let unit = ChuPair::unit();
        let p = pair(&[&[1, 0], &[0, 1]]);
        let t = tensor(&unit, &p).unwrap();
        assert_eq!((t.dim_v(), t.dim_w()), (p.dim_v(), p.dim_w()));
        let iso = tensor_unit_iso(&p).unwrap();
        assert!(iso.is_invertible());
        let t = tensor(&p, &p).unwrap();
        assert_eq!(t.dim_v(), 4);
    }

    #[test]
    fn identity_suite_on_units() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let u = ChuPair::unit();
        let results = verify_identities(&u, &u, &u, &mut rng).unwrap();
        assert!(results.iter().all(|r| r.pass), "{results:?}");
    }

    #[test]
    fn identity_suite_on_identity_pairings() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        let p = pair(&[&[1, 0], &[0, 1]]);
        let results = verify_identities(&p, &p, &p, &mut rng).unwrap();
        assert!(results.iter().all(|r| r.pass), "{results:?}");
    }

    #[test]
    fn identity_suite_on_random_pairs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..5 {
            let u = random_valid_pair(&mut rng, 3);
            let v = random_valid_pair(&mut rng, 3);
            let w = random_valid_pair(&mut rng, 3);
            let results = verify_identities(&u, &v, &w, &mut rng).unwrap();
            assert!(results.iter().all(|r| r.pass), "{results:?}");
        }
    }

    #[test]
    fn invalid_pair_rejected_by_hom() {
        let p = pair(&[&[0, 0], &[0, 1]]);
        let unit = ChuPair::unit();
        assert_eq!(hom_space(&p, &unit), Err(ChuError::NotValid));
    }

    #[test]
    fn adjointness_is_enforced() {
        let p = pair(&[&[1, 0], &[0, 1]]);
        let q = pair(&[&[2]]);
        let f = RationalMatrix::from_i64_rows(&[&[1, 0]]);
        let g = RationalMatrix::from_i64_rows(&[&[1], &[0]]);
        // <f(v), w>_2 = 2 v_0 w but <v, g(w)>_1 = v_0 w: fails.
        assert_eq!(ChuMorphism::new(&p, &q, f.clone(), g), Err(ChuError::AdjointnessFailed));
        // The reconstructed g fixes it.
        assert!(ChuMorphism::from_f(&p, &q, f).is_ok());
    }
}
