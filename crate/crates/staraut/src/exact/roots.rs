use core::cmp::Ordering;
use core::fmt;

use num_integer::Integer;

/// An exact element of the group of complex roots of unity.
///
/// The value `exp(2*pi*i * num/den)` is stored additively as the reduced
/// fraction `num/den` of its exponent, taken mod 1, with `0 <= num < den`.
/// The identity is `0/1`. Multiplication is exponent addition mod 1, so all
/// equations between roots of unity become integer arithmetic on reduced
/// fractions.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootOfUnity {
    num: i64,
    den: i64,
}

impl RootOfUnity {
    /// The identity `1`, stored as exponent `0/1`.
    pub const ONE: RootOfUnity = RootOfUnity { num: 0, den: 1 };

    /// Root of unity with exponent `num/den` (mod 1, reduced on entry).
    ///
    /// `den` must be positive.
    pub fn new(num: i64, den: i64) -> RootOfUnity {
        assert!(den > 0, "root-of-unity denominator must be positive");
        let mut n = num.rem_euclid(den);
        let g = n.gcd(&den);
        let mut d = den;
        if g > 1 {
            n /= g;
            d /= g;
        }
        if n == 0 {
            d = 1;
        }
        RootOfUnity { num: n, den: d }
    }

    /// `exp(2*pi*i / n)`, the canonical primitive n-th root.
    pub fn primitive(n: i64) -> RootOfUnity {
        RootOfUnity::new(1, n)
    }

    /// `-1`.
    pub fn minus_one() -> RootOfUnity {
        RootOfUnity::new(1, 2)
    }

    /// Numerator of the reduced exponent.
    pub fn num(&self) -> i64 {
        self.num
    }

    /// Denominator of the reduced exponent.
    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_one(&self) -> bool {
        self.num == 0
    }

    /// Multiplicative order; equals the reduced exponent denominator.
    pub fn order(&self) -> i64 {
        self.den
    }

    /// Product, i.e. exponent addition mod 1.
    pub fn mul(&self, other: &RootOfUnity) -> RootOfUnity {
        let den = self.den.lcm(&other.den);
        let num = self.num * (den / self.den) + other.num * (den / other.den);
        RootOfUnity::new(num, den)
    }

    /// Multiplicative inverse, i.e. exponent negation mod 1.
    pub fn inv(&self) -> RootOfUnity {
        RootOfUnity::new(-self.num, self.den)
    }

    /// `self / other`.
    pub fn div(&self, other: &RootOfUnity) -> RootOfUnity {
        self.mul(&other.inv())
    }

    /// `self^k` for any integer `k` (negative exponents allowed).
    pub fn pow(&self, k: i64) -> RootOfUnity {
        // Reduce k mod den first so the product never overflows.
        let k = k.rem_euclid(self.den);
        RootOfUnity::new(self.num * k, self.den)
    }

    /// The principal square root: exponent `a/N` maps to `a/(2N)`.
    ///
    /// This is a fixed branch choice; squaring the result always returns
    /// `self`, and the order of the result divides `2 * order(self)`.
    pub fn principal_sqrt(&self) -> RootOfUnity {
        RootOfUnity::new(self.num, 2 * self.den)
    }

    /// Whether the value lies in `mu_n`, the n-th roots of unity.
    pub fn has_order_dividing(&self, n: i64) -> bool {
        n > 0 && n % self.den == 0
    }
}

impl fmt::Debug for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({}/{})", self.num, self.den)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Ord for RootOfUnity {
    /// Orders by the exponent value in `[0, 1)`; used for canonical
    /// (lexicographically least) representatives in classification output.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl PartialOrd for RootOfUnity {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All elements of `mu_n` in exponent order `0/n, 1/n, ..., (n-1)/n`.
#[cfg(test)]
pub(crate) fn mu(n: i64) -> impl Iterator<Item = RootOfUnity> {
    (0..n).map(move |a| RootOfUnity::new(a, n))
}
