//! Weak quadratic forms on finite abelian groups: the associated
//! bihomomorphism, enumeration, the decomposition into a symmetric form and
//! a character, shifted symmetry, the representable/symmetric datum
//! bijection, and classification under pullback along `Aut(G)`.
//!
//! Forms are stored as total value tables `G -> k^x`; generator data only
//! ever appears as an enumeration device. Tables make every identity an
//! exhaustively checkable assertion.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::exact::RootOfUnity;
use crate::groups::{Character, FinAbGroup, GroupAutomorphism, GroupElement, GroupError};

/// Default cap on `|G|` for form enumeration.
pub const DEFAULT_ENUM_BOUND: i64 = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QFormError {
    TableSizeMismatch { expected: usize, got: usize },
    GroupMismatch,
    /// The associated map `beta_q` is not a bihomomorphism, so the input
    /// table was not a weak quadratic form.
    NotBilinear,
    /// `q(g) = q(-g)` fails.
    NotSymmetric,
    /// `q(g) = q(-g + g0)` fails for the given `g0`.
    NotShiftSymmetric,
    /// `eta(g) = beta_q(g, g0)` fails for the given datum.
    NotRepresentable,
    /// Square roots are needed but the group has an even-order factor.
    EvenOrderFactor,
    BoundExceeded { order: i64, bound: i64 },
    Group(GroupError),
}

impl fmt::Display for QFormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QFormError::TableSizeMismatch { expected, got } => {
                write!(f, "value table has {got} entries, group has order {expected}")
            }
            QFormError::GroupMismatch => write!(f, "operands live over different groups"),
            QFormError::NotBilinear => write!(f, "associated beta is not a bihomomorphism"),
            QFormError::NotSymmetric => write!(f, "form is not symmetric"),
            QFormError::NotShiftSymmetric => write!(f, "form is not symmetric with respect to g0"),
            QFormError::NotRepresentable => write!(f, "eta(g) != beta_q(g, g0) for some g"),
            QFormError::EvenOrderFactor => {
                write!(f, "group has an even-order factor, square roots unavailable")
            }
            QFormError::BoundExceeded { order, bound } => {
                write!(f, "group order {order} exceeds enumeration bound {bound}")
            }
            QFormError::Group(e) => write!(f, "{e}"),
        }
    }
}

impl From<GroupError> for QFormError {
    fn from(e: GroupError) -> Self {
        QFormError::Group(e)
    }
}

/// A total value table `q: G -> k^x`. Whether the table actually is a weak
/// quadratic form is decided by [`WeakQuadraticForm::is_weak_qform`]; the
/// constructor only pins the table to the group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeakQuadraticForm {
    group: FinAbGroup,
    values: Vec<RootOfUnity>,
}

impl WeakQuadraticForm {
    pub fn new(group: FinAbGroup, values: Vec<RootOfUnity>) -> Result<Self, QFormError> {
        if values.len() != group.order() as usize {
            return Err(QFormError::TableSizeMismatch {
                expected: group.order() as usize,
                got: values.len(),
            });
        }
        Ok(WeakQuadraticForm { group, values })
    }

    pub fn trivial(group: FinAbGroup) -> Self {
        let n = group.order() as usize;
        WeakQuadraticForm { group, values: alloc::vec![RootOfUnity::ONE; n] }
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn values(&self) -> &[RootOfUnity] {
        &self.values
    }

    pub fn value(&self, g: &GroupElement) -> RootOfUnity {
        self.values[self.group.index_of(g)]
    }

    /// `beta_q(g1, g2) = q(g1 + g2) q(g1)^-1 q(g2)^-1`, evaluated pointwise.
    pub fn beta(&self, g1: &GroupElement, g2: &GroupElement) -> RootOfUnity {
        self.value(&self.group.add(g1, g2)).div(&self.value(g1)).div(&self.value(g2))
    }

    /// Exhaustively checks that `beta_q` is a bihomomorphism. Linearity in
    /// the second argument follows because the defining expression is
    /// symmetric in its arguments.
    pub fn is_weak_qform(&self) -> bool {
        let elements = self.group.all_elements();
        for a in &elements {
            for b in &elements {
                let ab = self.group.add(a, b);
                for c in &elements {
                    if self.beta(&ab, c) != self.beta(a, c).mul(&self.beta(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Checks the classical axiom `q(g) = q(-g)` on top of weakness.
    pub fn is_qform(&self) -> bool {
        self.is_weak_qform() && self.is_even()
    }

    pub(crate) fn is_even(&self) -> bool {
        self.group.all_elements().iter().all(|g| self.value(g) == self.value(&self.group.neg(g)))
    }

    /// `q(g) = q(-g + g0)` for all `g`.
    pub fn is_symmetric_wrt(&self, g0: &GroupElement) -> bool {
        self.group
            .all_elements()
            .iter()
            .all(|g| self.value(g) == self.value(&self.group.add(&self.group.neg(g), g0)))
    }

    /// The associated bihomomorphism as a total table; errors when the
    /// input table was not a weak quadratic form.
    pub fn assoc_bihom(&self) -> Result<BiHom, QFormError> {
        if !self.is_weak_qform() {
            return Err(QFormError::NotBilinear);
        }
        let elements = self.group.all_elements();
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                table.push(self.beta(a, b));
            }
        }
        Ok(BiHom { group: self.group.clone(), table })
    }

    /// Pointwise product of value tables.
    pub fn mul(&self, other: &WeakQuadraticForm) -> Result<WeakQuadraticForm, QFormError> {
        if self.group != other.group {
            return Err(QFormError::GroupMismatch);
        }
        Ok(WeakQuadraticForm {
            group: self.group.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a.mul(b)).collect(),
        })
    }

    /// Multiplies the table by a character pointwise.
    pub fn mul_character(&self, chi: &Character) -> WeakQuadraticForm {
        let values = self
            .group
            .all_elements()
            .iter()
            .zip(&self.values)
            .map(|(g, v)| v.mul(&chi.eval(g)))
            .collect();
        WeakQuadraticForm { group: self.group.clone(), values }
    }

    /// Pullback `f*q` with `(f*q)(g) = q(f(g))`.
    pub fn pullback(&self, f: &GroupAutomorphism) -> WeakQuadraticForm {
        let values = self
            .group
            .all_elements()
            .iter()
            .map(|g| self.value(&f.apply(&self.group, g)))
            .collect();
        WeakQuadraticForm { group: self.group.clone(), values }
    }

    /// Lexicographic comparison of value tables (element order is the
    /// group's canonical enumeration). Used to pick orbit representatives.
    pub fn table_cmp(&self, other: &WeakQuadraticForm) -> Ordering {
        self.values.cmp(&other.values)
    }
}

/// A classical quadratic form: a weak quadratic form with `q(g) = q(-g)`.
/// The constructor validates both conditions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticForm {
    form: WeakQuadraticForm,
}

impl QuadraticForm {
    pub fn new(form: WeakQuadraticForm) -> Result<Self, QFormError> {
        if !form.is_weak_qform() {
            return Err(QFormError::NotBilinear);
        }
        if !form.is_even() {
            return Err(QFormError::NotSymmetric);
        }
        Ok(QuadraticForm { form })
    }

    pub fn trivial(group: FinAbGroup) -> Self {
        QuadraticForm { form: WeakQuadraticForm::trivial(group) }
    }

    pub fn weak(&self) -> &WeakQuadraticForm {
        &self.form
    }

    pub fn into_weak(self) -> WeakQuadraticForm {
        self.form
    }

    pub fn group(&self) -> &FinAbGroup {
        self.form.group()
    }

    pub fn value(&self, g: &GroupElement) -> RootOfUnity {
        self.form.value(g)
    }

    pub fn beta(&self, g1: &GroupElement, g2: &GroupElement) -> RootOfUnity {
        self.form.beta(g1, g2)
    }
}

/// A bihomomorphism `G x G -> k^x` as a total table; the constructor checks
/// linearity in each argument exhaustively.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiHom {
    group: FinAbGroup,
    table: Vec<RootOfUnity>,
}

impl BiHom {
    pub fn new(group: FinAbGroup, table: Vec<RootOfUnity>) -> Result<Self, QFormError> {
        let n = group.order() as usize;
        if table.len() != n * n {
            return Err(QFormError::TableSizeMismatch { expected: n * n, got: table.len() });
        }
        let b = BiHom { group, table };
        if !b.is_bilinear() {
            return Err(QFormError::NotBilinear);
        }
        Ok(b)
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn value(&self, g1: &GroupElement, g2: &GroupElement) -> RootOfUnity {
        let n = self.group.order() as usize;
        self.table[self.group.index_of(g1) * n + self.group.index_of(g2)]
    }

    fn is_bilinear(&self) -> bool {
        let elements = self.group.all_elements();
        for a in &elements {
            for b in &elements {
                let ab = self.group.add(a, b);
                for c in &elements {
                    if self.value(&ab, c) != self.value(a, c).mul(&self.value(b, c)) {
                        return false;
                    }
                    if self.value(c, &ab) != self.value(c, a).mul(&self.value(c, b)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn binom2(k: i64) -> i64 {
    k * (k - 1) / 2
}

/// Complete enumeration of `WQF(G, k^x)` with the default bound.
pub fn enumerate_wqf(group: &FinAbGroup) -> Result<Vec<WeakQuadraticForm>, QFormError> {
    enumerate_wqf_bounded(group, DEFAULT_ENUM_BOUND)
}

/// Complete enumeration of `WQF(G, k^x)` by generator data: per cyclic
/// factor a pair `C = q(e_i)` in `mu_{n^2}`, `B = beta(e_i, e_i)` in `mu_n`
/// subject to `C^n B^{n(n-1)/2} = 1`, plus one cross value
/// `beta(e_i, e_j)` in `mu_{gcd(n_i, n_j)}` per factor pair; the total
/// table is reconstructed with the factorwise product formula.
pub fn enumerate_wqf_bounded(
    group: &FinAbGroup,
    bound: i64,
) -> Result<Vec<WeakQuadraticForm>, QFormError> {
    if group.order() > bound {
        return Err(QFormError::BoundExceeded { order: group.order(), bound });
    }
    let orders = group.cyclic_orders();
    let r = orders.len();

    // (B, C) pairs per factor, in lexicographic (B, C) exponent order.
    let mut factor_choices: Vec<Vec<(RootOfUnity, RootOfUnity)>> = Vec::with_capacity(r);
    for &n in orders {
        let mut choices = Vec::new();
        for b in 0..n {
            let big_b = RootOfUnity::new(b, n);
            for c in 0..n * n {
                let big_c = RootOfUnity::new(c, n * n);
                if big_c.pow(n).mul(&big_b.pow(binom2(n))).is_one() {
                    choices.push((big_b, big_c));
                }
            }
        }
        factor_choices.push(choices);
    }
    // Cross values per ordered pair i < j.
    let mut cross_domains: Vec<Vec<RootOfUnity>> = Vec::new();
    let mut cross_index: Vec<(usize, usize)> = Vec::new();
    for i in 0..r {
        for j in (i + 1)..r {
            let g = num_integer::gcd(orders[i], orders[j]);
            cross_domains.push((0..g).map(|a| RootOfUnity::new(a, g)).collect());
            cross_index.push((i, j));
        }
    }

    let radices: Vec<usize> = factor_choices
        .iter()
        .map(|c| c.len())
        .chain(cross_domains.iter().map(|c| c.len()))
        .collect();
    let elements = group.all_elements();
    let mut out = Vec::new();
    let mut picks = alloc::vec![0usize; radices.len()];
    loop {
        let per_factor: Vec<(RootOfUnity, RootOfUnity)> =
            (0..r).map(|i| factor_choices[i][picks[i]]).collect();
        let cross: Vec<RootOfUnity> =
            (0..cross_domains.len()).map(|c| cross_domains[c][picks[r + c]]).collect();

        let values = elements
            .iter()
            .map(|g| {
                let ks = g.residues();
                let mut acc = RootOfUnity::ONE;
                for (i, &(b, c)) in per_factor.iter().enumerate() {
                    acc = acc.mul(&c.pow(ks[i])).mul(&b.pow(binom2(ks[i])));
                }
                for (c, &(i, j)) in cross_index.iter().enumerate() {
                    acc = acc.mul(&cross[c].pow(ks[i] * ks[j]));
                }
                acc
            })
            .collect();
        out.push(WeakQuadraticForm { group: group.clone(), values });

        let mut i = radices.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            picks[i] += 1;
            if picks[i] < radices[i] {
                break;
            }
            picks[i] = 0;
        }
    }
}

/// The classical quadratic forms, as the symmetric members of the weak
/// enumeration.
pub fn enumerate_qf(group: &FinAbGroup) -> Result<Vec<QuadraticForm>, QFormError> {
    enumerate_qf_bounded(group, DEFAULT_ENUM_BOUND)
}

pub fn enumerate_qf_bounded(
    group: &FinAbGroup,
    bound: i64,
) -> Result<Vec<QuadraticForm>, QFormError> {
    Ok(enumerate_wqf_bounded(group, bound)?
        .into_iter()
        .filter(|q| q.is_even())
        .map(|form| QuadraticForm { form })
        .collect())
}

/// Splits a weak quadratic form as `q = qt * eta` with `qt` a classical
/// quadratic form and `eta` a character, using the explicit factorwise
/// construction: on a factor of order `n` with `B = beta(e, e)` and
/// `C = q(e)`, set `eta(e) = C * B^{-1/2}` (principal branch) when `n` is
/// even and `eta(e) = C * B^{-l}` with `2l = n - 1` when `n` is odd; cross
/// terms of `qt` are inherited from `beta_q`. The associated
/// bihomomorphisms of `q` and `qt` coincide.
pub fn decompose(q: &WeakQuadraticForm) -> Result<(QuadraticForm, Character), QFormError> {
    if !q.is_weak_qform() {
        return Err(QFormError::NotBilinear);
    }
    let group = q.group().clone();
    let orders = group.cyclic_orders();
    let r = orders.len();

    let mut eta_images = Vec::with_capacity(r);
    // Value of the symmetric part on k * e_i, per factor.
    let mut qt_factor: Vec<Vec<RootOfUnity>> = Vec::with_capacity(r);
    for (i, &n) in orders.iter().enumerate() {
        let e = group.generator(i);
        let b = q.beta(&e, &e);
        let c = q.value(&e);
        // A square root of B: the principal branch in mu_{2n} for even n,
        // and the unique root inside mu_n (where squaring is bijective) for
        // odd n. Symmetry of the quadratic part forces qt(e)^2 = B.
        let half = if n % 2 == 0 { b.principal_sqrt() } else { b.pow((n + 1) / 2) };
        eta_images.push(c.div(&half));
        qt_factor.push((0..n).map(|k| half.pow(k).mul(&b.pow(binom2(k)))).collect());
    }
    let eta = Character::new(&group, eta_images)?;

    let values: Vec<RootOfUnity> = group
        .all_elements()
        .iter()
        .map(|g| {
            let ks = g.residues();
            let mut acc = RootOfUnity::ONE;
            for i in 0..r {
                acc = acc.mul(&qt_factor[i][ks[i] as usize]);
            }
            for i in 0..r {
                for j in (i + 1)..r {
                    let ei = group.generator(i);
                    let ej = group.generator(j);
                    acc = acc.mul(&q.beta(&ei, &ej).pow(ks[i] * ks[j]));
                }
            }
            acc
        })
        .collect();
    let qt = QuadraticForm::new(WeakQuadraticForm { group: group.clone(), values })?;

    // The decomposition theorem guarantees exact recombination; anything
    // else indicates an invalid input that slipped past the weakness check.
    let recombined = qt.weak().mul_character(&eta);
    if &recombined != q {
        return Err(QFormError::NotBilinear);
    }
    Ok((qt, eta))
}

/// Checks `q(k g) = q(g)^k beta(g, g)^(k choose 2)` exactly.
pub fn power_identity_check(q: &WeakQuadraticForm, g: &GroupElement, k: i64) -> bool {
    let lhs = q.value(&q.group().scalar_mul(k, g));
    let rhs = q.value(g).pow(k).mul(&q.beta(g, g).pow(binom2(k)));
    lhs == rhs
}

/// For `(q, g0)` symmetric, checks both shifted power identities
/// `q(k g) = q(g)^{k^2 - s} q(g + g0)^s` and
/// `q(-k g) = q(g)^s q(g + g0)^{k^2 - s}` with `s = k(k-1)/2`.
pub fn power_identity_check_symmetric(
    q: &WeakQuadraticForm,
    g0: &GroupElement,
    g: &GroupElement,
    k: i64,
) -> bool {
    let group = q.group();
    let s = binom2(k);
    let qg = q.value(g);
    let qgg0 = q.value(&group.add(g, g0));
    let plus = q.value(&group.scalar_mul(k, g)) == qg.pow(k * k - s).mul(&qgg0.pow(s));
    let minus = q.value(&group.scalar_mul(-k, g)) == qg.pow(s).mul(&qgg0.pow(k * k - s));
    plus && minus
}

/// A weak quadratic form symmetric with respect to `g0`:
/// `q(g) = q(-g + g0)` for all `g`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WsqfDatum {
    q: WeakQuadraticForm,
    g0: GroupElement,
}

impl WsqfDatum {
    pub fn new(q: WeakQuadraticForm, g0: GroupElement) -> Result<Self, QFormError> {
        if !q.is_weak_qform() {
            return Err(QFormError::NotBilinear);
        }
        if !q.is_symmetric_wrt(&g0) {
            return Err(QFormError::NotShiftSymmetric);
        }
        Ok(WsqfDatum { q, g0 })
    }

    pub fn q(&self) -> &WeakQuadraticForm {
        &self.q
    }

    pub fn g0(&self) -> &GroupElement {
        &self.g0
    }
}

/// A representable datum `(q, eta, g0)` with `eta(g) = beta_q(g, g0)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WrqfDatum {
    q: QuadraticForm,
    eta: Character,
    g0: GroupElement,
}

impl WrqfDatum {
    pub fn new(q: QuadraticForm, eta: Character, g0: GroupElement) -> Result<Self, QFormError> {
        let group = q.group();
        if !group.all_elements().iter().all(|g| eta.eval(g) == q.beta(g, &g0)) {
            return Err(QFormError::NotRepresentable);
        }
        Ok(WrqfDatum { q, eta, g0 })
    }

    pub fn q(&self) -> &QuadraticForm {
        &self.q
    }

    pub fn eta(&self) -> &Character {
        &self.eta
    }

    pub fn g0(&self) -> &GroupElement {
        &self.g0
    }

    pub fn group(&self) -> &FinAbGroup {
        self.q.group()
    }
}

/// `(q, eta, g0) -> (q eta, -2 g0)`; the image is symmetric with respect to
/// `-2 g0` by the shifted-symmetry corollary, and the constructor
/// re-verifies this.
pub fn wrqf_to_wsqf(d: &WrqfDatum) -> Result<WsqfDatum, QFormError> {
    let group = d.group().clone();
    let product = d.q.weak().mul_character(&d.eta);
    let g0 = group.scalar_mul(-2, &d.g0);
    WsqfDatum::new(product, g0)
}

/// `(q, g0) -> (qt, eta, -sqrt(g0))` via the canonical decomposition;
/// requires the group to have square roots (all factors of odd order).
pub fn wsqf_to_wrqf(d: &WsqfDatum) -> Result<WrqfDatum, QFormError> {
    let group = d.q.group().clone();
    if !group.has_square_roots() {
        return Err(QFormError::EvenOrderFactor);
    }
    let (qt, eta) = decompose(&d.q)?;
    let root = group.square_root(&d.g0).ok_or(QFormError::EvenOrderFactor)?;
    WrqfDatum::new(qt, eta, group.neg(&root))
}

/// All of `WSQF(G, k^x)` as explicit data, by filtering the weak form
/// enumeration against every shift.
pub fn enumerate_wsqf(group: &FinAbGroup) -> Result<Vec<WsqfDatum>, QFormError> {
    let forms = enumerate_wqf(group)?;
    let mut out = Vec::new();
    for g0 in group.all_elements() {
        for q in &forms {
            if q.is_symmetric_wrt(&g0) {
                out.push(WsqfDatum { q: q.clone(), g0: g0.clone() });
            }
        }
    }
    Ok(out)
}

/// All of `WRQF(G, k^x)`: for each classical form `q` and each `g0`, the
/// character is forced to be `beta_q(-, g0)`.
pub fn enumerate_wrqf(group: &FinAbGroup) -> Result<Vec<WrqfDatum>, QFormError> {
    enumerate_wrqf_bounded(group, DEFAULT_ENUM_BOUND)
}

pub fn enumerate_wrqf_bounded(
    group: &FinAbGroup,
    bound: i64,
) -> Result<Vec<WrqfDatum>, QFormError> {
    let forms = enumerate_qf_bounded(group, bound)?;
    let mut out = Vec::new();
    for g0 in group.all_elements() {
        for q in &forms {
            let images = (0..group.rank()).map(|i| q.beta(&group.generator(i), &g0)).collect();
            let eta = Character::new(group, images)?;
            out.push(WrqfDatum::new(q.clone(), eta, g0.clone())?);
        }
    }
    Ok(out)
}

/// One `Aut(G)`-pullback orbit of a classified form list.
#[derive(Clone, Debug)]
pub struct Orbit {
    /// Lexicographically least table among the orbit members.
    pub representative: WeakQuadraticForm,
    /// Indices into the classified input list.
    pub members: Vec<usize>,
}

impl Orbit {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Partitions forms into pullback orbits `q ~ f*q`. All forms must live
/// over the same group; orbits are sorted by representative table, members
/// by input index.
pub fn classify(forms: &[WeakQuadraticForm]) -> Result<Vec<Orbit>, QFormError> {
    classify_bounded(forms, crate::groups::DEFAULT_AUT_BOUND)
}

pub fn classify_bounded(
    forms: &[WeakQuadraticForm],
    aut_bound: i64,
) -> Result<Vec<Orbit>, QFormError> {
    let Some(first) = forms.first() else {
        return Ok(Vec::new());
    };
    let group = first.group().clone();
    if forms.iter().any(|q| q.group() != &group) {
        return Err(QFormError::GroupMismatch);
    }
    let auts = group.automorphisms_bounded(aut_bound)?;
    let mut assigned = alloc::vec![false; forms.len()];
    let mut orbits: Vec<Orbit> = Vec::new();
    for i in 0..forms.len() {
        if assigned[i] {
            continue;
        }
        let orbit_tables: Vec<WeakQuadraticForm> =
            auts.iter().map(|f| forms[i].pullback(f)).collect();
        let mut members = Vec::new();
        for (j, candidate) in forms.iter().enumerate() {
            if !assigned[j] && orbit_tables.iter().any(|t| t == candidate) {
                members.push(j);
            }
        }
        let representative = members
            .iter()
            .map(|&j| forms[j].clone())
            .min_by(|a, b| a.table_cmp(b))
            .expect("orbit has at least one member");
        for &j in &members {
            assigned[j] = true;
        }
        orbits.push(Orbit { representative, members });
    }
    orbits.sort_by(|a, b| a.representative.table_cmp(&b.representative));
    Ok(orbits)
}

/// Number of classes of `(q, g0)` data under `q = f*q'`, `f(g0) = g0'`.
pub fn wsqf_class_count(data: &[WsqfDatum]) -> Result<usize, QFormError> {
    let Some(first) = data.first() else { return Ok(0) };
    let group = first.q.group().clone();
    let auts = group.automorphisms()?;
    let equivalent = |a: &WsqfDatum, b: &WsqfDatum| {
        auts.iter().any(|f| a.q == b.q.pullback(f) && f.apply(&group, &a.g0) == b.g0)
    };
    Ok(count_classes(data, equivalent))
}

/// Number of classes of `(q, eta, g0)` data under `q eta = f*(q' eta')`,
/// `f(g0) = g0'`.
pub fn wrqf_class_count(data: &[WrqfDatum]) -> Result<usize, QFormError> {
    let Some(first) = data.first() else { return Ok(0) };
    let group = first.group().clone();
    let auts = group.automorphisms()?;
    let products: Vec<WeakQuadraticForm> =
        data.iter().map(|d| d.q.weak().mul_character(&d.eta)).collect();
    let equivalent = |i: &usize, j: &usize| {
        auts.iter().any(|f| {
            products[*i] == products[*j].pullback(f) && f.apply(&group, &data[*i].g0) == data[*j].g0
        })
    };
    let idx: Vec<usize> = (0..data.len()).collect();
    Ok(count_classes(&idx, equivalent))
}

fn count_classes<T>(items: &[T], equivalent: impl Fn(&T, &T) -> bool) -> usize {
    let mut reps: Vec<&T> = Vec::new();
    for item in items {
        if !reps.iter().any(|r| equivalent(item, r)) {
            reps.push(item);
        }
    }
    reps.len()
}
