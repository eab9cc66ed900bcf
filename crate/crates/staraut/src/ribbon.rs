//! Skeletal (weak) ribbon monoidal structures on graded vector spaces.
//!
//! On the skeleton the coherence data of a braided monoidal structure with
//! twist collapses to scalar tables: an associator table `psi`, a braiding
//! table `omega`, a twist table `theta` and a reference degree `g0` for the
//! duality the twist is ribbon with respect to. Pentagon, triangle, both
//! hexagons, the twist condition and the ribbon condition are exhaustively
//! checkable equations between roots of unity; this module builds such
//! structures from representable quadratic form data, extracts the data
//! back, and decides equivalence of structures by a bounded witness search.

use alloc::vec::Vec;
use core::fmt;

use crate::cohomology::{
    self, AbelianCocycle3, Cochain2, Cochain3, CohomologyError,
};
use crate::exact::RootOfUnity;
use crate::groups::{Character, FinAbGroup, GroupAutomorphism, GroupElement, GroupError};
use crate::qforms::{self, QFormError, WrqfDatum};

/// Default cap on `|G|` for the structure-equivalence witness search.
pub const DEFAULT_EQUIV_BOUND: i64 = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RibbonError {
    GroupMismatch,
    ThetaSizeMismatch { expected: usize, got: usize },
    /// The structure fails one of the five coherence checks.
    NotCoherent,
    /// `theta / q` is not multiplicative, so the twist condition is
    /// violated.
    RatioNotCharacter,
    /// Square roots are needed but the group has an even-order factor.
    EvenOrderFactor,
    BoundExceeded { order: i64, bound: i64 },
    Cohomology(CohomologyError),
    QForm(QFormError),
    Group(GroupError),
}

impl fmt::Display for RibbonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RibbonError::GroupMismatch => write!(f, "operands live over different groups"),
            RibbonError::ThetaSizeMismatch { expected, got } => {
                write!(f, "twist table has {got} entries, group has order {expected}")
            }
            RibbonError::NotCoherent => write!(f, "structure fails a coherence check"),
            RibbonError::RatioNotCharacter => write!(f, "theta/q is not a character"),
            RibbonError::EvenOrderFactor => {
                write!(f, "group has an even-order factor, square roots unavailable")
            }
            RibbonError::BoundExceeded { order, bound } => {
                write!(f, "group order {order} exceeds bound {bound}")
            }
            RibbonError::Cohomology(e) => write!(f, "{e}"),
            RibbonError::QForm(e) => write!(f, "{e}"),
            RibbonError::Group(e) => write!(f, "{e}"),
        }
    }
}

impl From<CohomologyError> for RibbonError {
    fn from(e: CohomologyError) -> Self {
        RibbonError::Cohomology(e)
    }
}

impl From<QFormError> for RibbonError {
    fn from(e: QFormError) -> Self {
        RibbonError::QForm(e)
    }
}

impl From<GroupError> for RibbonError {
    fn from(e: GroupError) -> Self {
        RibbonError::Group(e)
    }
}

/// Pentagon check: `d psi = 1` on all quadruples.
pub fn check_pentagon(psi: &Cochain3) -> bool {
    psi.is_closed()
}

/// Triangle check: `psi(g, 0, h) = 1` for all pairs.
pub fn check_triangle(psi: &Cochain3) -> bool {
    let g = psi.group();
    let zero = g.zero();
    g.all_elements()
        .iter()
        .all(|a| g.all_elements().iter().all(|b| psi.value([a, &zero, b]).is_one()))
}

/// Both hexagon equations for the braiding table.
pub fn check_hexagons(psi: &Cochain3, omega: &Cochain2) -> bool {
    psi.group() == omega.group() && cohomology::hexagons_hold(psi, omega)
}

/// Twist condition `theta(g1 + g2) = Omega(g2, g1) Omega(g1, g2) theta(g1)
/// theta(g2)` on all pairs.
pub fn check_twist(omega: &Cochain2, theta: &[RootOfUnity]) -> bool {
    let g = omega.group();
    if theta.len() != g.order() as usize {
        return false;
    }
    let value = |x: &GroupElement| theta[g.index_of(x)];
    g.all_elements().iter().all(|g1| {
        g.all_elements().iter().all(|g2| {
            let lhs = value(&g.add(g1, g2));
            let rhs = omega
                .value([g2, g1])
                .mul(&omega.value([g1, g2]))
                .mul(&value(g1))
                .mul(&value(g2));
            lhs == rhs
        })
    })
}

/// Ribbon condition with respect to the duality at `g0`:
/// `theta(-g + g0) = theta(g)` for all `g`.
pub fn check_ribbon_wrt(group: &FinAbGroup, theta: &[RootOfUnity], g0: &GroupElement) -> bool {
    if theta.len() != group.order() as usize {
        return false;
    }
    group.all_elements().iter().all(|g| {
        theta[group.index_of(&group.add(&group.neg(g), g0))] == theta[group.index_of(g)]
    })
}

/// Outcome of the five skeletal coherence checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoherenceReport {
    pub pentagon: bool,
    pub triangle: bool,
    pub hexagons: bool,
    pub twist: bool,
    pub ribbon: bool,
}

impl CoherenceReport {
    pub fn all_pass(&self) -> bool {
        self.pentagon && self.triangle && self.hexagons && self.twist && self.ribbon
    }
}

/// A skeletal structure `(psi, omega, theta, g0)` on `G`-graded vector
/// spaces. Construction pins shapes and normalization; the coherence
/// axioms are checked by [`SkeletalStructure::check_all`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkeletalStructure {
    psi: Cochain3,
    omega: Cochain2,
    theta: Vec<RootOfUnity>,
    g0: GroupElement,
}

impl SkeletalStructure {
    pub fn new(
        psi: Cochain3,
        omega: Cochain2,
        theta: Vec<RootOfUnity>,
        g0: GroupElement,
    ) -> Result<Self, RibbonError> {
        if psi.group() != omega.group() {
            return Err(RibbonError::GroupMismatch);
        }
        let expected = psi.group().order() as usize;
        if theta.len() != expected {
            return Err(RibbonError::ThetaSizeMismatch { expected, got: theta.len() });
        }
        Ok(SkeletalStructure { psi, omega, theta, g0 })
    }

    pub fn group(&self) -> &FinAbGroup {
        self.psi.group()
    }

    pub fn psi(&self) -> &Cochain3 {
        &self.psi
    }

    pub fn omega(&self) -> &Cochain2 {
        &self.omega
    }

    pub fn theta(&self) -> &[RootOfUnity] {
        &self.theta
    }

    pub fn theta_at(&self, g: &GroupElement) -> RootOfUnity {
        self.theta[self.group().index_of(g)]
    }

    pub fn g0(&self) -> &GroupElement {
        &self.g0
    }

    pub fn check_all(&self) -> CoherenceReport {
        CoherenceReport {
            pentagon: check_pentagon(&self.psi),
            triangle: check_triangle(&self.psi),
            hexagons: check_hexagons(&self.psi, &self.omega),
            twist: check_twist(&self.omega, &self.theta),
            ribbon: check_ribbon_wrt(self.group(), &self.theta, &self.g0),
        }
    }
}

/// Builds the skeletal structure attached to a representable datum
/// `(q, eta, g0)`: the cocycle `(psi_q, Omega_q)` comes from the diagonal
/// constraint solve, the twist is the pointwise product `q * eta`, and the
/// duality degree is `-2 g0`. All five coherence checks are verified on
/// the result.
pub fn build_from_wrqf(d: &WrqfDatum) -> Result<SkeletalStructure, RibbonError> {
    let group = d.group().clone();
    let cocycle = cohomology::cocycle_from_qform(d.q())?;
    let theta: Vec<RootOfUnity> = group
        .all_elements()
        .iter()
        .map(|g| d.q().value(g).mul(&d.eta().eval(g)))
        .collect();
    let g0 = group.scalar_mul(-2, d.g0());
    let s = SkeletalStructure::new(cocycle.psi().clone(), cocycle.omega().clone(), theta, g0)?;
    if !s.check_all().all_pass() {
        return Err(RibbonError::NotCoherent);
    }
    Ok(s)
}

/// Recovers the representable datum from a coherent structure over an
/// odd-order group: `q` is the diagonal of `omega`, `eta = theta / q`
/// (verified to be a character), and the shift is `-sqrt(g0)`.
pub fn extract_wrqf(s: &SkeletalStructure) -> Result<WrqfDatum, RibbonError> {
    if !s.check_all().all_pass() {
        return Err(RibbonError::NotCoherent);
    }
    let group = s.group().clone();
    if !group.has_square_roots() {
        return Err(RibbonError::EvenOrderFactor);
    }
    let cocycle = AbelianCocycle3::new(s.psi.clone(), s.omega.clone())?;
    let q = cohomology::em_qform(&cocycle)?;

    // theta / q must be a character; its generator images determine it.
    let images: Vec<RootOfUnity> = (0..group.rank())
        .map(|i| {
            let e = group.generator(i);
            s.theta_at(&e).div(&q.value(&e))
        })
        .collect();
    let eta = Character::new(&group, images).map_err(|_| RibbonError::RatioNotCharacter)?;
    for g in group.all_elements() {
        if eta.eval(&g) != s.theta_at(&g).div(&q.value(&g)) {
            return Err(RibbonError::RatioNotCharacter);
        }
    }

    let root = group.square_root(&s.g0).ok_or(RibbonError::EvenOrderFactor)?;
    let g0 = group.neg(&root);
    Ok(WrqfDatum::new(q, eta, g0)?)
}

/// All structures built from the full `WRQF(G)` enumeration, in enumeration
/// order.
pub fn enumerate_structures(group: &FinAbGroup) -> Result<Vec<SkeletalStructure>, RibbonError> {
    enumerate_structures_bounded(group, qforms::DEFAULT_ENUM_BOUND)
}

pub fn enumerate_structures_bounded(
    group: &FinAbGroup,
    bound: i64,
) -> Result<Vec<SkeletalStructure>, RibbonError> {
    qforms::enumerate_wrqf_bounded(group, bound)?.iter().map(build_from_wrqf).collect()
}

/// Searches `Aut(G) x {normalized 2-cochains}` for a braided monoidal
/// equivalence witness between two structures: an `f` with
/// `theta1 = f* theta2`, `f(g0_1) = g0_2`, and a `kappa` with
/// `psi1 = f*(psi2) d kappa` and `omega1 = f*(omega2) kappa_comm`.
/// Automorphisms are scanned in canonical enumeration order and the
/// cochain comes out of the deterministic congruence solve, so the witness
/// is reproducible; the monoidal- and braided-functor equations for a
/// found witness are re-verified rather than trusted.
pub fn equivalent_structures(
    s1: &SkeletalStructure,
    s2: &SkeletalStructure,
) -> Result<Option<(GroupAutomorphism, Cochain2)>, RibbonError> {
    equivalent_structures_bounded(s1, s2, DEFAULT_EQUIV_BOUND)
}

pub fn equivalent_structures_bounded(
    s1: &SkeletalStructure,
    s2: &SkeletalStructure,
    bound: i64,
) -> Result<Option<(GroupAutomorphism, Cochain2)>, RibbonError> {
    if s1.group() != s2.group() {
        return Err(RibbonError::GroupMismatch);
    }
    let group = s1.group().clone();
    if group.order() > bound {
        return Err(RibbonError::BoundExceeded { order: group.order(), bound });
    }
    let elements = group.all_elements();
    for f in group.automorphisms()? {
        if f.apply(&group, &s1.g0) != s2.g0 {
            continue;
        }
        if !elements.iter().all(|g| s1.theta_at(g) == s2.theta_at(&f.apply(&group, g))) {
            continue;
        }
        let psi_target = s1.psi.ratio(&s2.psi.pullback(&f))?;
        let omega_target = s1.omega.ratio(&s2.omega.pullback(&f))?;
        if let Some(kappa) = cohomology::coboundary_witness(&group, &psi_target, &omega_target) {
            if verify_witness(s1, s2, &f, &kappa) {
                return Ok(Some((f, kappa)));
            }
        }
    }
    Ok(None)
}

/// Re-verifies the witness equations pointwise: the monoidal coherence of
/// `Phi = kappa * id`, its compatibility with the braidings, and the twist
/// and duality-degree matching.
fn verify_witness(
    s1: &SkeletalStructure,
    s2: &SkeletalStructure,
    f: &GroupAutomorphism,
    kappa: &Cochain2,
) -> bool {
    let group = s1.group();
    let elements = group.all_elements();
    let fe = |g: &GroupElement| f.apply(group, g);
    for a in &elements {
        for b in &elements {
            // Braided compatibility.
            let lhs = s1.omega.value([b, a]).mul(&kappa.value([a, b]));
            let rhs = kappa.value([b, a]).mul(&s2.omega.value([&fe(b), &fe(a)]));
            if lhs != rhs {
                return false;
            }
            for c in &elements {
                // Monoidal coherence of (F, Phi).
                let lhs = s1
                    .psi
                    .value([a, b, c])
                    .mul(&kappa.value([a, b]))
                    .mul(&kappa.value([&group.add(a, b), c]));
                let rhs = kappa
                    .value([b, c])
                    .mul(&kappa.value([a, &group.add(b, c)]))
                    .mul(&s2.psi.value([&fe(a), &fe(b), &fe(c)]));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    elements.iter().all(|g| s1.theta_at(g) == s2.theta_at(&fe(g)))
        && fe(&s1.g0) == s2.g0
}

/// Number of equivalence classes among the given structures.
pub fn structure_class_count(structures: &[SkeletalStructure]) -> Result<usize, RibbonError> {
    let mut reps: Vec<&SkeletalStructure> = Vec::new();
    for s in structures {
        let mut fresh = true;
        for r in &reps {
            if equivalent_structures(s, r)?.is_some() {
                fresh = false;
                break;
            }
        }
        if fresh {
            reps.push(s);
        }
    }
    Ok(reps.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::ab_coboundary;
    use crate::qforms::{enumerate_wrqf, wrqf_class_count};
    use alloc::vec;

    fn z(n: i64) -> FinAbGroup {
        FinAbGroup::cyclic(n)
    }

    fn trivial_structure(group: FinAbGroup) -> SkeletalStructure {
        let n = group.order() as usize;
        SkeletalStructure::new(
            Cochain3::trivial(group.clone()),
            Cochain2::trivial(group.clone()),
            vec![RootOfUnity::ONE; n],
            group.zero(),
        )
        .unwrap()
    }

    #[test]
    fn trivial_structure_passes_everything() {
        let s = trivial_structure(z(3));
        assert!(s.check_all().all_pass());
        for g0 in s.group().all_elements() {
            assert!(check_ribbon_wrt(s.group(), s.theta(), &g0));
        }
    }

    #[test]
    fn coboundaries_pass_pentagon() {
        let g = z(3);
        for a in 0..3 {
            for b in 0..3 {
                let mut table = Vec::new();
                for x in g.all_elements() {
                    for y in g.all_elements() {
                        let (xk, yk) = (x.residues()[0], y.residues()[0]);
                        table.push(RootOfUnity::new(a * xk * yk + b * xk * xk * yk, 9));
                    }
                }
                let kappa = Cochain2::new(g.clone(), table).unwrap();
                let (d, _) = ab_coboundary(&kappa);
                assert!(check_pentagon(&d));
                assert!(check_triangle(&d));
            }
        }
    }

    #[test]
    fn perturbed_psi_fails_pentagon() {
        // psi(1,1,1) = -1 is the nontrivial closed 3-cochain on Z2, so the
        // perturbation must have order > 2 to break a quadruple:
        // d psi(1,1,1,1) = psi(1,1,1)^2 = -1.
        let g = z(2);
        let one = g.element(&[1]).unwrap();
        let mut table = vec![RootOfUnity::ONE; 8];
        let idx = (g.index_of(&one) * 2 + g.index_of(&one)) * 2 + g.index_of(&one);
        table[idx] = RootOfUnity::new(1, 4);
        let psi = Cochain3::new(g.clone(), table.clone()).unwrap();
        assert!(!check_pentagon(&psi));
        table[idx] = RootOfUnity::minus_one();
        let closed = Cochain3::new(g, table).unwrap();
        assert!(check_pentagon(&closed));
    }

    #[test]
    fn hexagons_examples() {
        // Bilinear omega with trivial psi passes.
        let g = z(3);
        let mut table = Vec::new();
        for a in g.all_elements() {
            for b in g.all_elements() {
                table.push(RootOfUnity::new(a.residues()[0] * b.residues()[0], 3));
            }
        }
        let omega = Cochain2::new(g.clone(), table).unwrap();
        assert!(check_hexagons(&Cochain3::trivial(g), &omega));

        // Non-bilinear omega on Z2+Z2 fails.
        let g = FinAbGroup::new(vec![2, 2]).unwrap();
        let e1 = g.element(&[1, 0]).unwrap();
        let mut table = Vec::new();
        for a in g.all_elements() {
            for b in g.all_elements() {
                table.push(if a == e1 && b == e1 {
                    RootOfUnity::new(1, 4)
                } else {
                    RootOfUnity::ONE
                });
            }
        }
        let omega = Cochain2::new(g.clone(), table).unwrap();
        assert!(!check_hexagons(&Cochain3::trivial(g), &omega));
    }

    #[test]
    fn twist_example_z2() {
        // Omega(1,1) = i and theta(1) = i: theta(0) = 1 but
        // Omega(1,1)^2 theta(1)^2 = (-1)(-1) = 1, so the pair passes.
        let g = z(2);
        let mut table = Vec::new();
        for a in g.all_elements() {
            for b in g.all_elements() {
                table.push(if a.residues()[0] == 1 && b.residues()[0] == 1 {
                    RootOfUnity::new(1, 4)
                } else {
                    RootOfUnity::ONE
                });
            }
        }
        let omega = Cochain2::new(g.clone(), table).unwrap();
        let theta = vec![RootOfUnity::ONE, RootOfUnity::new(1, 4)];
        assert!(check_twist(&omega, &theta));
        // Tilting theta breaks it.
        let theta_bad = vec![RootOfUnity::ONE, RootOfUnity::new(1, 3)];
        assert!(!check_twist(&omega, &theta_bad));
    }

    #[test]
    fn ribbon_wrt_examples() {
        let g = z(3);
        let theta_trivial = vec![RootOfUnity::ONE; 3];
        for g0 in g.all_elements() {
            assert!(check_ribbon_wrt(&g, &theta_trivial, &g0));
        }
        // The character w^g is not ribbon for any shift: theta(g0) = 1 is
        // forced at g = 0 and fails for g0 != 0, while g0 = 0 needs
        // theta(-g) = theta(g).
        let theta_chi: Vec<RootOfUnity> = (0..3).map(|k| RootOfUnity::new(k, 3)).collect();
        for g0 in g.all_elements() {
            assert!(!check_ribbon_wrt(&g, &theta_chi, &g0));
        }
    }

    #[test]
    fn build_passes_all_checks_small() {
        for group in [z(2), z(3), z(4), FinAbGroup::new(vec![2, 2]).unwrap()] {
            for d in enumerate_wrqf(&group).unwrap() {
                let s = build_from_wrqf(&d).unwrap();
                assert!(s.check_all().all_pass());
            }
        }
    }

    #[test]
    fn trivial_datum_builds_trivial_twist() {
        let g = z(3);
        let d = enumerate_wrqf(&g)
            .unwrap()
            .into_iter()
            .find(|d| {
                d.q().weak().values().iter().all(|v| v.is_one()) && d.g0() == &g.zero()
            })
            .unwrap();
        let s = build_from_wrqf(&d).unwrap();
        assert!(s.theta().iter().all(|v| v.is_one()));
        assert_eq!(s.g0(), &g.zero());
    }

    #[test]
    fn extract_build_roundtrip_odd() {
        for group in [z(3), z(5)] {
            for d in enumerate_wrqf(&group).unwrap() {
                let s = build_from_wrqf(&d).unwrap();
                let back = extract_wrqf(&s).unwrap();
                assert_eq!(&back, &d);
            }
        }
    }

    #[test]
    fn build_after_extract_reproduces_structure_up_to_cohomology() {
        let group = z(3);
        for d in enumerate_wrqf(&group).unwrap() {
            let s = build_from_wrqf(&d).unwrap();
            let rebuilt = build_from_wrqf(&extract_wrqf(&s).unwrap()).unwrap();
            assert_eq!(rebuilt.theta(), s.theta());
            assert_eq!(rebuilt.g0(), s.g0());
            // psi is only determined up to an abelian coboundary.
            let c1 = AbelianCocycle3::new(s.psi().clone(), s.omega().clone()).unwrap();
            let c2 = AbelianCocycle3::new(rebuilt.psi().clone(), rebuilt.omega().clone()).unwrap();
            assert!(cohomology::cohomologous_witness(&c1, &c2).unwrap().is_some());
        }
    }

    #[test]
    fn self_equivalence_yields_identity_witness() {
        let s = trivial_structure(z(3));
        let (f, kappa) = equivalent_structures(&s, &s).unwrap().unwrap();
        assert_eq!(f, GroupAutomorphism::identity(s.group()));
        assert!(kappa.table().iter().all(|v| v.is_one()));
    }

    #[test]
    fn twisted_pullback_is_equivalent() {
        let group = z(3);
        let data = enumerate_wrqf(&group).unwrap();
        let s = build_from_wrqf(&data[4 % data.len()]).unwrap();
        for f in group.automorphisms().unwrap() {
            // Pull the whole structure back along f and twist by a
            // coboundary; the witness search must find it.
            let mut kappa_table = Vec::new();
            for a in group.all_elements() {
                for b in group.all_elements() {
                    let (ak, bk) = (a.residues()[0], b.residues()[0]);
                    kappa_table.push(RootOfUnity::new(ak * bk, 3));
                }
            }
            let kappa = Cochain2::new(group.clone(), kappa_table).unwrap();
            let (dk, comm) = ab_coboundary(&kappa);
            let theta2: Vec<RootOfUnity> = group
                .all_elements()
                .iter()
                .map(|g| s.theta_at(&f.apply(&group, g)))
                .collect();
            let pulled = SkeletalStructure::new(
                s.psi().pullback(&f).product(&dk).unwrap(),
                s.omega().pullback(&f).product(&comm).unwrap(),
                theta2,
                group
                    .automorphisms()
                    .unwrap()
                    .iter()
                    .find_map(|inv| {
                        (inv.compose(&group, &f) == GroupAutomorphism::identity(&group))
                            .then(|| inv.apply(&group, s.g0()))
                    })
                    .unwrap(),
                )
            .unwrap();
            assert!(equivalent_structures(&pulled, &s).unwrap().is_some());
        }
    }

    #[test]
    fn structures_with_different_theta_are_inequivalent() {
        let group = z(3);
        let structures = enumerate_structures(&group).unwrap();
        let trivial = trivial_structure(group);
        for s in &structures {
            if s.theta().iter().any(|v| !v.is_one()) {
                assert!(equivalent_structures(s, &trivial).unwrap().is_none());
            }
        }
    }

    #[test]
    fn class_counts_match_wrqf_classes_z3() {
        let group = z(3);
        let data = enumerate_wrqf(&group).unwrap();
        let structures: Vec<SkeletalStructure> =
            data.iter().map(|d| build_from_wrqf(d).unwrap()).collect();
        let wrqf_classes = wrqf_class_count(&data).unwrap();
        let structure_classes = structure_class_count(&structures).unwrap();
        assert_eq!(wrqf_classes, structure_classes);
    }

    #[test]
    fn g0_zero_extracts_sign_character() {
        // For structures with g0 = 0, the extracted character squares to 1.
        let group = z(3);
        for d in enumerate_wrqf(&group).unwrap() {
            let s = build_from_wrqf(&d).unwrap();
            if s.g0() != &group.zero() {
                continue;
            }
            let back = extract_wrqf(&s).unwrap();
            for g in group.all_elements() {
                assert!(back.eta().eval(&g).has_order_dividing(2));
            }
        }
    }

    #[test]
    fn equivalence_bound_enforced() {
        let s = trivial_structure(FinAbGroup::cyclic(7));
        assert!(matches!(
            equivalent_structures(&s, &s),
            Err(RibbonError::BoundExceeded { .. })
        ));
    }
}
