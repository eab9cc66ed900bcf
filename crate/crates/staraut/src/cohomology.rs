//! Abelian group cohomology in degree three: normalized cochains,
//! coboundaries, abelian 3-cocycles `(psi, Omega)` with their hexagon
//! equations, the diagonal map onto quadratic forms, and witness searches
//! for cohomologous cocycles.
//!
//! All searches run over roots of unity whose order divides
//! `D = 2 * exp(G)^2`. In exponent coordinates every cocycle condition is
//! linear over `Z_D`, so "search" means an exact linear-congruence solve —
//! no closed-form cocycle representatives are hard-coded anywhere, and
//! every solution is certified against the checkable definitions.

use alloc::vec::Vec;
use core::fmt;

use crate::exact::modsolve::LinSystem;
use crate::exact::RootOfUnity;
use crate::groups::{FinAbGroup, GroupAutomorphism, GroupElement, GroupError};
use crate::qforms::{QFormError, QuadraticForm, WeakQuadraticForm};

/// Default cap on `|G|` for the cohomologous-witness search.
pub const DEFAULT_WITNESS_BOUND: i64 = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CohomologyError {
    TableSizeMismatch { expected: usize, got: usize },
    GroupMismatch,
    /// A cochain table is not normalized (value at a zero argument is not 1).
    NotNormalized,
    /// The pair fails `d psi = 1` or a hexagon equation.
    NotACocycle,
    /// The diagonal of `Omega` is not a quadratic form, or the associated
    /// bihomomorphism identity fails; the input pair was not a cocycle.
    InvalidCocycle,
    /// The constraint solve found no cocycle within the denominator bound;
    /// for a valid quadratic form this would falsify the diagonal
    /// correspondence at this size and is treated as an internal error.
    SearchFailed,
    BoundExceeded { order: i64, bound: i64 },
    QForm(QFormError),
    Group(GroupError),
}

impl fmt::Display for CohomologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CohomologyError::TableSizeMismatch { expected, got } => {
                write!(f, "cochain table has {got} entries, expected {expected}")
            }
            CohomologyError::GroupMismatch => write!(f, "operands live over different groups"),
            CohomologyError::NotNormalized => write!(f, "cochain is not normalized"),
            CohomologyError::NotACocycle => write!(f, "pair is not an abelian 3-cocycle"),
            CohomologyError::InvalidCocycle => write!(f, "input cocycle fails its postconditions"),
            CohomologyError::SearchFailed => write!(f, "constraint search failed unexpectedly"),
            CohomologyError::BoundExceeded { order, bound } => {
                write!(f, "group order {order} exceeds bound {bound}")
            }
            CohomologyError::QForm(e) => write!(f, "{e}"),
            CohomologyError::Group(e) => write!(f, "{e}"),
        }
    }
}

impl From<QFormError> for CohomologyError {
    fn from(e: QFormError) -> Self {
        CohomologyError::QForm(e)
    }
}

impl From<GroupError> for CohomologyError {
    fn from(e: GroupError) -> Self {
        CohomologyError::Group(e)
    }
}

/// Denominator bound for all cocycle searches: `2 * exp(G)^2`.
pub fn denominator_bound(group: &FinAbGroup) -> i64 {
    let e = group.exponent();
    2 * e * e
}

macro_rules! cochain_type {
    ($name:ident, $arity:literal) => {
        /// A normalized cochain, stored as a total table over element
        /// index tuples.
        #[derive(Clone, PartialEq, Eq, Debug)]
        pub struct $name {
            group: FinAbGroup,
            table: Vec<RootOfUnity>,
        }

        impl $name {
            pub fn new(group: FinAbGroup, table: Vec<RootOfUnity>) -> Result<Self, CohomologyError> {
                let n = group.order() as usize;
                let expected = n.pow($arity);
                if table.len() != expected {
                    return Err(CohomologyError::TableSizeMismatch { expected, got: table.len() });
                }
                let c = $name { group, table };
                if !c.is_normalized() {
                    return Err(CohomologyError::NotNormalized);
                }
                Ok(c)
            }

            pub fn trivial(group: FinAbGroup) -> Self {
                let n = (group.order() as usize).pow($arity);
                $name { group, table: alloc::vec![RootOfUnity::ONE; n] }
            }

            pub fn group(&self) -> &FinAbGroup {
                &self.group
            }

            pub fn table(&self) -> &[RootOfUnity] {
                &self.table
            }

            fn at(&self, idx: [usize; $arity as usize]) -> RootOfUnity {
                let n = self.group.order() as usize;
                let mut flat = 0usize;
                for i in idx {
                    flat = flat * n + i;
                }
                self.table[flat]
            }

            pub fn value(&self, args: [&GroupElement; $arity as usize]) -> RootOfUnity {
                self.at(args.map(|g| self.group.index_of(g)))
            }

            fn is_normalized(&self) -> bool {
                let n = self.group.order() as usize;
                let total = n.pow($arity);
                for flat in 0..total {
                    let mut rest = flat;
                    let mut has_zero = false;
                    for _ in 0..$arity {
                        if rest % n == 0 {
                            has_zero = true;
                        }
                        rest /= n;
                    }
                    if has_zero && !self.table[flat].is_one() {
                        return false;
                    }
                }
                true
            }

            /// Pointwise product.
            pub fn product(&self, other: &Self) -> Result<Self, CohomologyError> {
                if self.group != other.group {
                    return Err(CohomologyError::GroupMismatch);
                }
                Ok($name {
                    group: self.group.clone(),
                    table: self.table.iter().zip(&other.table).map(|(a, b)| a.mul(b)).collect(),
                })
            }

            /// Pointwise ratio `self / other`.
            pub fn ratio(&self, other: &Self) -> Result<Self, CohomologyError> {
                if self.group != other.group {
                    return Err(CohomologyError::GroupMismatch);
                }
                Ok($name {
                    group: self.group.clone(),
                    table: self.table.iter().zip(&other.table).map(|(a, b)| a.div(b)).collect(),
                })
            }

            /// Pullback along a group automorphism, argumentwise.
            pub fn pullback(&self, f: &GroupAutomorphism) -> Self {
                let n = self.group.order() as usize;
                let total = n.pow($arity);
                let mut table = Vec::with_capacity(total);
                // image of each element index under f
                let mapped: Vec<usize> = self
                    .group
                    .all_elements()
                    .iter()
                    .map(|g| self.group.index_of(&f.apply(&self.group, g)))
                    .collect();
                for flat in 0..total {
                    let mut rest = flat;
                    let mut idx = [0usize; $arity as usize];
                    for slot in (0..$arity as usize).rev() {
                        idx[slot] = mapped[rest % n];
                        rest /= n;
                    }
                    table.push(self.at(idx));
                }
                $name { group: self.group.clone(), table }
            }
        }
    };
}

cochain_type!(Cochain1, 1);
cochain_type!(Cochain2, 2);
cochain_type!(Cochain3, 3);
cochain_type!(Cochain4, 4);

impl Cochain1 {
    /// `d kappa(g1, g2) = kappa(g2) kappa(g1 g2)^-1 kappa(g1)`.
    pub fn coboundary(&self) -> Cochain2 {
        let g = &self.group;
        let elements = g.all_elements();
        let mut table = Vec::with_capacity(elements.len().pow(2));
        for g1 in &elements {
            for g2 in &elements {
                let v = self
                    .value([g2])
                    .mul(&self.value([&g.add(g1, g2)]).inv())
                    .mul(&self.value([g1]));
                table.push(v);
            }
        }
        Cochain2 { group: g.clone(), table }
    }
}

impl Cochain2 {
    /// `d kappa(g1, g2, g3) = kappa(g2, g3) kappa(g1 g2, g3)^-1
    /// kappa(g1, g2 g3) kappa(g1, g2)^-1`.
    pub fn coboundary(&self) -> Cochain3 {
        let g = &self.group;
        let elements = g.all_elements();
        let mut table = Vec::with_capacity(elements.len().pow(3));
        for g1 in &elements {
            for g2 in &elements {
                for g3 in &elements {
                    let v = self
                        .value([g2, g3])
                        .mul(&self.value([&g.add(g1, g2), g3]).inv())
                        .mul(&self.value([g1, &g.add(g2, g3)]))
                        .mul(&self.value([g1, g2]).inv());
                    table.push(v);
                }
            }
        }
        Cochain3 { group: g.clone(), table }
    }

    /// The commutator 2-cochain `kappa_comm(g1, g2) = kappa(g1, g2)
    /// kappa(g2, g1)^-1`.
    pub fn commutator(&self) -> Cochain2 {
        let g = &self.group;
        let elements = g.all_elements();
        let mut table = Vec::with_capacity(elements.len().pow(2));
        for g1 in &elements {
            for g2 in &elements {
                table.push(self.value([g1, g2]).div(&self.value([g2, g1])));
            }
        }
        Cochain2 { group: g.clone(), table }
    }
}

impl Cochain3 {
    /// `d psi(g1, g2, g3, g4) = psi(g2, g3, g4) psi(g1 g2, g3, g4)^-1
    /// psi(g1, g2 g3, g4) psi(g1, g2, g3 g4)^-1 psi(g1, g2, g3)`.
    pub fn coboundary(&self) -> Cochain4 {
        let g = &self.group;
        let elements = g.all_elements();
        let mut table = Vec::with_capacity(elements.len().pow(4));
        for g1 in &elements {
            for g2 in &elements {
                for g3 in &elements {
                    for g4 in &elements {
                        let v = self
                            .value([g2, g3, g4])
                            .mul(&self.value([&g.add(g1, g2), g3, g4]).inv())
                            .mul(&self.value([g1, &g.add(g2, g3), g4]))
                            .mul(&self.value([g1, g2, &g.add(g3, g4)]).inv())
                            .mul(&self.value([g1, g2, g3]));
                        table.push(v);
                    }
                }
            }
        }
        Cochain4 { group: g.clone(), table }
    }

    pub fn is_closed(&self) -> bool {
        self.coboundary().table.iter().all(|v| v.is_one())
    }
}

/// The abelian coboundary `d_ab(kappa) = (d kappa, kappa_comm)`.
pub fn ab_coboundary(kappa: &Cochain2) -> (Cochain3, Cochain2) {
    (kappa.coboundary(), kappa.commutator())
}

/// Exhaustively verifies `d psi = 1` together with both hexagon equations
/// linking `psi` and `Omega`.
pub fn is_abelian_3cocycle(psi: &Cochain3, omega: &Cochain2) -> bool {
    if psi.group() != omega.group() {
        return false;
    }
    if !psi.is_closed() {
        return false;
    }
    hexagons_hold(psi, omega)
}

pub(crate) fn hexagons_hold(psi: &Cochain3, omega: &Cochain2) -> bool {
    let g = psi.group();
    let elements = g.all_elements();
    for g1 in &elements {
        for g2 in &elements {
            for g3 in &elements {
                let lhs1 = psi
                    .value([g2, g3, g1])
                    .inv()
                    .mul(&omega.value([g1, &g.add(g2, g3)]))
                    .mul(&psi.value([g1, g2, g3]).inv());
                let rhs1 = omega
                    .value([g1, g3])
                    .mul(&psi.value([g2, g1, g3]).inv())
                    .mul(&omega.value([g1, g2]));
                if lhs1 != rhs1 {
                    return false;
                }
                let lhs2 = psi
                    .value([g3, g1, g2])
                    .mul(&omega.value([&g.add(g1, g2), g3]))
                    .mul(&psi.value([g1, g2, g3]));
                let rhs2 = omega
                    .value([g1, g3])
                    .mul(&psi.value([g1, g3, g2]))
                    .mul(&omega.value([g2, g3]));
                if lhs2 != rhs2 {
                    return false;
                }
            }
        }
    }
    true
}

/// A normalized abelian 3-cocycle `(psi, Omega)`; the constructor verifies
/// the closure and hexagon conditions exhaustively.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbelianCocycle3 {
    psi: Cochain3,
    omega: Cochain2,
}

impl AbelianCocycle3 {
    pub fn new(psi: Cochain3, omega: Cochain2) -> Result<Self, CohomologyError> {
        if psi.group() != omega.group() {
            return Err(CohomologyError::GroupMismatch);
        }
        if !is_abelian_3cocycle(&psi, &omega) {
            return Err(CohomologyError::NotACocycle);
        }
        Ok(AbelianCocycle3 { psi, omega })
    }

    pub fn trivial(group: FinAbGroup) -> Self {
        AbelianCocycle3 { psi: Cochain3::trivial(group.clone()), omega: Cochain2::trivial(group) }
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

    /// Pointwise product of cocycles (the group law of `Z^3_ab`).
    pub fn product(&self, other: &Self) -> Result<Self, CohomologyError> {
        Self::new(self.psi.product(&other.psi)?, self.omega.product(&other.omega)?)
    }

    /// Twists by an abelian coboundary: `(psi * d kappa, omega * kappa_comm)`.
    pub fn twist_by(&self, kappa: &Cochain2) -> Result<Self, CohomologyError> {
        let (dk, comm) = ab_coboundary(kappa);
        Self::new(self.psi.product(&dk)?, self.omega.product(&comm)?)
    }
}

/// The diagonal map: `q(g) = Omega(g, g)`. The result is verified to be a
/// quadratic form whose bihomomorphism satisfies
/// `beta_q(g1, g2) = Omega(g1, g2) Omega(g2, g1)` pointwise; failure marks
/// the input as invalid.
pub fn em_qform(c: &AbelianCocycle3) -> Result<QuadraticForm, CohomologyError> {
    let group = c.group().clone();
    let values: Vec<RootOfUnity> =
        group.all_elements().iter().map(|g| c.omega.value([g, g])).collect();
    let weak = WeakQuadraticForm::new(group.clone(), values)?;
    let q = QuadraticForm::new(weak).map_err(|_| CohomologyError::InvalidCocycle)?;
    for g1 in group.all_elements() {
        for g2 in group.all_elements() {
            let sym = c.omega.value([&g1, &g2]).mul(&c.omega.value([&g2, &g1]));
            if q.beta(&g1, &g2) != sym {
                return Err(CohomologyError::InvalidCocycle);
            }
        }
    }
    Ok(q)
}

/// Index of a nonzero element among the nonzero elements, used to number
/// the unknowns of normalized tables (entries touching 0 are pinned to 1).
struct VarTable {
    n: usize,
    psi_vars: usize,
}

impl VarTable {
    fn new(n: usize) -> Self {
        let m = n - 1;
        VarTable { n, psi_vars: m * m * m }
    }

    fn total(&self) -> usize {
        let m = self.n - 1;
        self.psi_vars + m * m
    }

    /// Var index of `psi(i, j, k)`; `None` when any argument is zero.
    fn psi(&self, i: usize, j: usize, k: usize) -> Option<usize> {
        if i == 0 || j == 0 || k == 0 {
            return None;
        }
        let m = self.n - 1;
        Some(((i - 1) * m + (j - 1)) * m + (k - 1))
    }

    /// Var index of `omega(i, j)`; `None` when any argument is zero.
    fn omega(&self, i: usize, j: usize) -> Option<usize> {
        if i == 0 || j == 0 {
            return None;
        }
        let m = self.n - 1;
        Some(self.psi_vars + (i - 1) * m + (j - 1))
    }
}

fn exponent_in(x: &RootOfUnity, modulus: i64) -> Option<i64> {
    if modulus % x.den() != 0 {
        return None;
    }
    Some(x.num() * (modulus / x.den()))
}

fn push(row: &mut Vec<(usize, i64)>, var: Option<usize>, sign: i64) {
    if let Some(v) = var {
        row.push((v, sign));
    }
}

/// Builds the pentagon (`d psi = 1`) and hexagon rows shared by every
/// cocycle-shaped solve. Right-hand sides are contributed by the caller.
fn cocycle_rows(
    group: &FinAbGroup,
    vars: &VarTable,
    sys: &mut LinSystem,
    hexagon_rhs: impl Fn(usize, usize, usize) -> (i64, i64),
) {
    let n = group.order() as usize;
    let add = |a: usize, b: usize| group.index_of(&group.add(&group.element_at(a), &group.element_at(b)));
    // d psi = 1 over all quadruples.
    for g1 in 0..n {
        for g2 in 0..n {
            for g3 in 0..n {
                for g4 in 0..n {
                    let mut row = Vec::new();
                    push(&mut row, vars.psi(g2, g3, g4), 1);
                    push(&mut row, vars.psi(add(g1, g2), g3, g4), -1);
                    push(&mut row, vars.psi(g1, add(g2, g3), g4), 1);
                    push(&mut row, vars.psi(g1, g2, add(g3, g4)), -1);
                    push(&mut row, vars.psi(g1, g2, g3), 1);
                    if !row.is_empty() {
                        sys.add_row(&row, 0);
                    }
                }
            }
        }
    }
    // Both hexagons over all triples.
    for g1 in 0..n {
        for g2 in 0..n {
            for g3 in 0..n {
                let (rhs1, rhs2) = hexagon_rhs(g1, g2, g3);
                let mut row = Vec::new();
                push(&mut row, vars.psi(g2, g3, g1), -1);
                push(&mut row, vars.omega(g1, add(g2, g3)), 1);
                push(&mut row, vars.psi(g1, g2, g3), -1);
                push(&mut row, vars.omega(g1, g3), -1);
                push(&mut row, vars.psi(g2, g1, g3), 1);
                push(&mut row, vars.omega(g1, g2), -1);
                sys.add_row(&row, rhs1);

                let mut row = Vec::new();
                push(&mut row, vars.psi(g3, g1, g2), 1);
                push(&mut row, vars.omega(add(g1, g2), g3), 1);
                push(&mut row, vars.psi(g1, g2, g3), 1);
                push(&mut row, vars.omega(g1, g3), -1);
                push(&mut row, vars.psi(g1, g3, g2), -1);
                push(&mut row, vars.omega(g2, g3), -1);
                sys.add_row(&row, rhs2);
            }
        }
    }
}

fn tables_from_solution(
    group: &FinAbGroup,
    vars: &VarTable,
    solution: &[i64],
    modulus: i64,
) -> (Cochain3, Cochain2) {
    let n = group.order() as usize;
    let mut psi_table = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                psi_table.push(match vars.psi(i, j, k) {
                    Some(v) => RootOfUnity::new(solution[v], modulus),
                    None => RootOfUnity::ONE,
                });
            }
        }
    }
    let mut omega_table = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            omega_table.push(match vars.omega(i, j) {
                Some(v) => RootOfUnity::new(solution[v], modulus),
                None => RootOfUnity::ONE,
            });
        }
    }
    (
        Cochain3 { group: group.clone(), table: psi_table },
        Cochain2 { group: group.clone(), table: omega_table },
    )
}

/// Finds a normalized abelian 3-cocycle whose diagonal is the given
/// quadratic form, by an exact constraint solve over exponents mod
/// `2 * exp(G)^2`. No closed-form representative is assumed; the result is
/// certified by the cocycle checks and by the diagonal round trip.
pub fn cocycle_from_qform(q: &QuadraticForm) -> Result<AbelianCocycle3, CohomologyError> {
    let group = q.group().clone();
    let modulus = denominator_bound(&group);
    let n = group.order() as usize;
    let vars = VarTable::new(n.max(1));
    let mut sys = LinSystem::new(vars.total(), modulus);
    cocycle_rows(&group, &vars, &mut sys, |_, _, _| (0, 0));
    // Diagonal constraints Omega(g, g) = q(g).
    for g in 1..n {
        if let Some(v) = vars.omega(g, g) {
            let target = exponent_in(&q.value(&group.element_at(g)), modulus)
                .ok_or(CohomologyError::SearchFailed)?;
            sys.add_row(&[(v, 1)], target);
        }
    }
    let solution = sys.solve().ok_or(CohomologyError::SearchFailed)?;
    let (psi, omega) = tables_from_solution(&group, &vars, &solution, modulus);
    let cocycle = AbelianCocycle3::new(psi, omega).map_err(|_| CohomologyError::SearchFailed)?;
    if &em_qform(&cocycle)? != q {
        return Err(CohomologyError::SearchFailed);
    }
    Ok(cocycle)
}

/// Searches for a normalized 2-cochain `kappa` with
/// `c1 = c2 * d_ab(kappa)`, over denominators dividing `2 * exp(G)^2`.
/// Returns `None` when no witness exists within the bound; by the diagonal
/// correspondence this agrees with `em_qform(c1) != em_qform(c2)`.
pub fn cohomologous_witness(
    c1: &AbelianCocycle3,
    c2: &AbelianCocycle3,
) -> Result<Option<Cochain2>, CohomologyError> {
    cohomologous_witness_bounded(c1, c2, DEFAULT_WITNESS_BOUND)
}

pub fn cohomologous_witness_bounded(
    c1: &AbelianCocycle3,
    c2: &AbelianCocycle3,
    bound: i64,
) -> Result<Option<Cochain2>, CohomologyError> {
    if c1.group() != c2.group() {
        return Err(CohomologyError::GroupMismatch);
    }
    let group = c1.group().clone();
    if group.order() > bound {
        return Err(CohomologyError::BoundExceeded { order: group.order(), bound });
    }
    let psi_ratio = c1.psi.ratio(&c2.psi)?;
    let omega_ratio = c1.omega.ratio(&c2.omega)?;
    Ok(coboundary_witness(&group, &psi_ratio, &omega_ratio))
}

/// Solves `d kappa = psi_target`, `kappa_comm = omega_target` for a
/// normalized 2-cochain, all in exponent coordinates mod `2 * exp(G)^2`.
pub(crate) fn coboundary_witness(
    group: &FinAbGroup,
    psi_target: &Cochain3,
    omega_target: &Cochain2,
) -> Option<Cochain2> {
    let modulus = denominator_bound(group);
    let n = group.order() as usize;
    let m = n.saturating_sub(1);
    let var = |i: usize, j: usize| -> Option<usize> {
        if i == 0 || j == 0 {
            None
        } else {
            Some((i - 1) * m + (j - 1))
        }
    };
    let mut sys = LinSystem::new(m * m, modulus);
    let elements = group.all_elements();
    let add = |a: usize, b: usize| group.index_of(&group.add(&elements[a], &elements[b]));
    for g1 in 0..n {
        for g2 in 0..n {
            for g3 in 0..n {
                let rhs = exponent_in(
                    &psi_target.value([&elements[g1], &elements[g2], &elements[g3]]),
                    modulus,
                )?;
                let mut row = Vec::new();
                push(&mut row, var(g2, g3), 1);
                push(&mut row, var(add(g1, g2), g3), -1);
                push(&mut row, var(g1, add(g2, g3)), 1);
                push(&mut row, var(g1, g2), -1);
                sys.add_row(&row, rhs);
            }
        }
    }
    for g1 in 0..n {
        for g2 in 0..n {
            let rhs = exponent_in(&omega_target.value([&elements[g1], &elements[g2]]), modulus)?;
            let mut row = Vec::new();
            push(&mut row, var(g1, g2), 1);
            push(&mut row, var(g2, g1), -1);
            sys.add_row(&row, rhs);
        }
    }
    let solution = sys.solve()?;
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            table.push(match var(i, j) {
                Some(v) => RootOfUnity::new(solution[v], modulus),
                None => RootOfUnity::ONE,
            });
        }
    }
    Some(Cochain2 { group: group.clone(), table })
}
