//! Finite abelian groups presented as products of cyclic groups, together
//! with their elements, characters, automorphisms and square roots.
//!
//! Groups are kept in the decomposition they were given in (no Smith normal
//! form): everything downstream works factorwise on an arbitrary
//! decomposition. Elements use additive notation throughout.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::exact::RootOfUnity;

/// Default cap on `|G|` for the brute-force automorphism enumeration.
pub const DEFAULT_AUT_BOUND: i64 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    /// A cyclic factor of order < 2 was supplied.
    InvalidCyclicOrder(i64),
    /// An element whose residue vector length does not match the group rank.
    RankMismatch { expected: usize, got: usize },
    /// `|G|` exceeds the configured enumeration bound.
    BoundExceeded { order: i64, bound: i64 },
    /// Generator images do not define a homomorphism (an image order does
    /// not divide the generator order).
    NotAHomomorphism,
    /// Generator images define a non-bijective endomorphism.
    NotBijective,
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::InvalidCyclicOrder(n) => write!(f, "cyclic factor order {n} must be >= 2"),
            GroupError::RankMismatch { expected, got } => {
                write!(f, "element has {got} residues, group has rank {expected}")
            }
            GroupError::BoundExceeded { order, bound } => {
                write!(f, "group order {order} exceeds enumeration bound {bound}")
            }
            GroupError::NotAHomomorphism => write!(f, "generator images do not define a homomorphism"),
            GroupError::NotBijective => write!(f, "generator images define a non-bijective map"),
        }
    }
}

/// A finite abelian group `Z_{n_1} + ... + Z_{n_r}` with all `n_i >= 2`.
/// Rank 0 is the trivial group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinAbGroup {
    cyclic_orders: Vec<i64>,
}

/// An element of a [`FinAbGroup`], stored as a residue vector
/// `(k_1, ..., k_r)` with `0 <= k_i < n_i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    residues: Vec<i64>,
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})", self.residues)
    }
}

impl FinAbGroup {
    pub fn new(cyclic_orders: Vec<i64>) -> Result<Self, GroupError> {
        if let Some(&n) = cyclic_orders.iter().find(|&&n| n < 2) {
            return Err(GroupError::InvalidCyclicOrder(n));
        }
        Ok(FinAbGroup { cyclic_orders })
    }

    pub fn trivial() -> Self {
        FinAbGroup { cyclic_orders: Vec::new() }
    }

    pub fn cyclic(n: i64) -> Self {
        Self::new(vec![n]).expect("cyclic order must be >= 2")
    }

    pub fn cyclic_orders(&self) -> &[i64] {
        &self.cyclic_orders
    }

    pub fn rank(&self) -> usize {
        self.cyclic_orders.len()
    }

    pub fn order(&self) -> i64 {
        self.cyclic_orders.iter().product()
    }

    pub fn exponent(&self) -> i64 {
        self.cyclic_orders.iter().fold(1, |acc, n| acc.lcm(n))
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { residues: vec![0; self.rank()] }
    }

    /// Builds an element from arbitrary integers, reduced mod `n_i`.
    pub fn element(&self, residues: &[i64]) -> Result<GroupElement, GroupError> {
        if residues.len() != self.rank() {
            return Err(GroupError::RankMismatch { expected: self.rank(), got: residues.len() });
        }
        Ok(GroupElement {
            residues: residues.iter().zip(&self.cyclic_orders).map(|(k, n)| k.rem_euclid(*n)).collect(),
        })
    }

    /// The i-th canonical generator `e_i`.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut residues = vec![0; self.rank()];
        residues[i] = 1 % self.cyclic_orders[i];
        GroupElement { residues }
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        debug_assert_eq!(a.residues.len(), self.rank());
        debug_assert_eq!(b.residues.len(), self.rank());
        GroupElement {
            residues: a
                .residues
                .iter()
                .zip(&b.residues)
                .zip(&self.cyclic_orders)
                .map(|((x, y), n)| (x + y) % n)
                .collect(),
        }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement {
            residues: a.residues.iter().zip(&self.cyclic_orders).map(|(x, n)| (-x).rem_euclid(*n)).collect(),
        }
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    /// `k * a` for any integer `k`.
    pub fn scalar_mul(&self, k: i64, a: &GroupElement) -> GroupElement {
        GroupElement {
            residues: a
                .residues
                .iter()
                .zip(&self.cyclic_orders)
                .map(|(x, n)| (k.rem_euclid(*n) * x) % n)
                .collect(),
        }
    }

    /// Additive order of `a`.
    pub fn element_order(&self, a: &GroupElement) -> i64 {
        a.residues
            .iter()
            .zip(&self.cyclic_orders)
            .fold(1i64, |acc, (k, n)| acc.lcm(&(n / k.gcd(n))))
    }

    /// All elements in lexicographic residue order.
    pub fn all_elements(&self) -> Vec<GroupElement> {
        (0..self.order() as usize).map(|i| self.element_at(i)).collect()
    }

    /// Index of an element in the lexicographic enumeration.
    pub fn index_of(&self, a: &GroupElement) -> usize {
        let mut idx = 0usize;
        for (k, n) in a.residues.iter().zip(&self.cyclic_orders) {
            idx = idx * (*n as usize) + (*k as usize);
        }
        idx
    }

    /// Inverse of [`Self::index_of`].
    pub fn element_at(&self, mut idx: usize) -> GroupElement {
        let mut residues = vec![0i64; self.rank()];
        for i in (0..self.rank()).rev() {
            let n = self.cyclic_orders[i] as usize;
            residues[i] = (idx % n) as i64;
            idx /= n;
        }
        GroupElement { residues }
    }

    /// Solves `2x = g`; returns the least solution componentwise. For
    /// odd-order groups the solution is unique.
    pub fn square_root(&self, g: &GroupElement) -> Option<GroupElement> {
        let mut residues = Vec::with_capacity(self.rank());
        for (k, n) in g.residues.iter().zip(&self.cyclic_orders) {
            if n % 2 == 1 {
                // 2 is invertible: x = k * (n+1)/2.
                residues.push((k * ((n + 1) / 2)) % n);
            } else if k % 2 == 0 {
                residues.push(k / 2);
            } else {
                return None;
            }
        }
        Some(GroupElement { residues })
    }

    /// Whether every element has a square root; holds exactly when all
    /// cyclic factors have odd order.
    pub fn has_square_roots(&self) -> bool {
        self.cyclic_orders.iter().all(|n| n % 2 == 1)
    }

    /// All `|G|` characters `G -> k^x`, in lexicographic order of the
    /// exponents of the generator images.
    pub fn characters(&self) -> Vec<Character> {
        let mut out = Vec::with_capacity(self.order() as usize);
        for idx in 0..self.order() as usize {
            let js = self.element_at(idx);
            let images = js
                .residues
                .iter()
                .zip(&self.cyclic_orders)
                .map(|(j, n)| RootOfUnity::new(*j, *n))
                .collect();
            out.push(Character { images });
        }
        out
    }

    /// Complete list of automorphisms by brute force over generator-image
    /// tuples, using the default bound of [`DEFAULT_AUT_BOUND`].
    pub fn automorphisms(&self) -> Result<Vec<GroupAutomorphism>, GroupError> {
        self.automorphisms_bounded(DEFAULT_AUT_BOUND)
    }

    pub fn automorphisms_bounded(&self, bound: i64) -> Result<Vec<GroupAutomorphism>, GroupError> {
        let order = self.order();
        if order > bound {
            return Err(GroupError::BoundExceeded { order, bound });
        }
        let elements = self.all_elements();
        // Candidate images of e_i: elements of order dividing n_i.
        let candidates: Vec<Vec<&GroupElement>> = self
            .cyclic_orders
            .iter()
            .map(|n| elements.iter().filter(|x| n % self.element_order(x) == 0).collect())
            .collect();
        let mut out = Vec::new();
        let mut picks = vec![0usize; self.rank()];
        loop {
            let images: Vec<GroupElement> =
                picks.iter().zip(&candidates).map(|(&p, c)| c[p].clone()).collect();
            let aut = GroupAutomorphism { images };
            if self.is_bijective(&aut, &elements) {
                out.push(aut);
            }
            // Mixed-radix increment over candidate picks.
            let mut i = self.rank();
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                picks[i] += 1;
                if picks[i] < candidates[i].len() {
                    break;
                }
                picks[i] = 0;
            }
        }
    }

    fn is_bijective(&self, f: &GroupAutomorphism, elements: &[GroupElement]) -> bool {
        let mut seen = vec![false; elements.len()];
        for x in elements {
            let idx = self.index_of(&f.apply(self, x));
            if seen[idx] {
                return false;
            }
            seen[idx] = true;
        }
        true
    }
}

/// A character `G -> k^x`, given by the images of the canonical generators;
/// the image of `e_i` has order dividing `n_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Character {
    images: Vec<RootOfUnity>,
}

impl Character {
    pub fn new(group: &FinAbGroup, images: Vec<RootOfUnity>) -> Result<Self, GroupError> {
        if images.len() != group.rank() {
            return Err(GroupError::RankMismatch { expected: group.rank(), got: images.len() });
        }
        if images.iter().zip(group.cyclic_orders()).any(|(z, n)| !z.has_order_dividing(*n)) {
            return Err(GroupError::NotAHomomorphism);
        }
        Ok(Character { images })
    }

    pub fn trivial(group: &FinAbGroup) -> Self {
        Character { images: vec![RootOfUnity::ONE; group.rank()] }
    }

    pub fn images(&self) -> &[RootOfUnity] {
        &self.images
    }

    pub fn eval(&self, g: &GroupElement) -> RootOfUnity {
        let mut acc = RootOfUnity::ONE;
        for (z, k) in self.images.iter().zip(&g.residues) {
            acc = acc.mul(&z.pow(*k));
        }
        acc
    }

    /// Pointwise product of characters.
    pub fn mul(&self, other: &Character) -> Character {
        Character {
            images: self.images.iter().zip(&other.images).map(|(a, b)| a.mul(b)).collect(),
        }
    }
}

/// An automorphism of a [`FinAbGroup`], given by generator images.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAutomorphism {
    images: Vec<GroupElement>,
}

impl GroupAutomorphism {
    /// Validates that the images define a bijective homomorphism.
    pub fn new(group: &FinAbGroup, images: Vec<GroupElement>) -> Result<Self, GroupError> {
        if images.len() != group.rank() {
            return Err(GroupError::RankMismatch { expected: group.rank(), got: images.len() });
        }
        for (img, n) in images.iter().zip(group.cyclic_orders()) {
            if n % group.element_order(img) != 0 {
                return Err(GroupError::NotAHomomorphism);
            }
        }
        let aut = GroupAutomorphism { images };
        if !group.is_bijective(&aut, &group.all_elements()) {
            return Err(GroupError::NotBijective);
        }
        Ok(aut)
    }

    pub fn identity(group: &FinAbGroup) -> Self {
        GroupAutomorphism { images: (0..group.rank()).map(|i| group.generator(i)).collect() }
    }

    pub fn images(&self) -> &[GroupElement] {
        &self.images
    }

    pub fn apply(&self, group: &FinAbGroup, x: &GroupElement) -> GroupElement {
        let mut acc = group.zero();
        for (k, img) in x.residues.iter().zip(&self.images) {
            acc = group.add(&acc, &group.scalar_mul(*k, img));
        }
        acc
    }

    /// `self` after `other`: `(self.compose(other)).apply(x) = self(other(x))`.
    pub fn compose(&self, group: &FinAbGroup, other: &GroupAutomorphism) -> GroupAutomorphism {
        GroupAutomorphism {
            images: other.images.iter().map(|img| self.apply(group, img)).collect(),
        }
    }
}

impl GroupElement {
    pub fn residues(&self) -> &[i64] {
        &self.residues
    }
}
