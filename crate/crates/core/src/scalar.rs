//! Exact arithmetic in the ring `Z[φ]`, `φ = (1 + √5) / 2`.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

/// The number `a + b·φ` with integer `a`, `b`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactScalar {
    pub a: i64,
    pub b: i64,
}

impl ExactScalar {
    pub const ZERO: Self = Self { a: 0, b: 0 };
    pub const ONE: Self = Self { a: 1, b: 0 };
    pub const PHI: Self = Self { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub const fn int(a: i64) -> Self {
        Self { a, b: 0 }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Sign of `a + bφ`, decided on integers only.
    ///
    /// `2(a + bφ) = (2a + b) + b√5`, so the sign is that of `x + y√5` with
    /// `x = 2a + b`, `y = b`.
    pub fn signum(self) -> i32 {
        let x = 2 * self.a as i128 + self.b as i128;
        let y = self.b as i128;
        let sx = x.signum() as i32;
        let sy = y.signum() as i32;
        if sx >= 0 && sy >= 0 {
            return if sx == 0 && sy == 0 { 0 } else { 1 };
        }
        if sx <= 0 && sy <= 0 {
            return -1;
        }
        // Opposite signs: compare x² with 5y².
        let lhs = x * x;
        let rhs = 5 * y * y;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sx,
            Ordering::Less => sy,
            Ordering::Equal => 0,
        }
    }

    /// Conjugate under `√5 ↦ −√5`, i.e. `φ ↦ 1 − φ`.
    pub fn conjugate(self) -> Self {
        Self::new(self.a + self.b, -self.b)
    }

    /// Field norm `(a + bφ)(a + b(1 − φ)) = a² + ab − b²`.
    pub fn norm(self) -> i64 {
        self.a * self.a + self.a * self.b - self.b * self.b
    }
}

impl Add for ExactScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for ExactScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for ExactScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul for ExactScalar {
    type Output = Self;
    // (a + bφ)(c + dφ) = ac + (ad + bc)φ + bdφ², with φ² = φ + 1.
    fn mul(self, rhs: Self) -> Self {
        let (a, b, c, d) = (self.a, self.b, rhs.a, rhs.b);
        Self::new(a * c + b * d, a * d + b * c + b * d)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}φ"),
            (a, b) if b < 0 => write!(f, "{a}-{}φ", -b),
            (a, b) => write!(f, "{a}+{b}φ"),
        }
    }
}
