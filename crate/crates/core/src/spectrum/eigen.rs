use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{pow, Signed, Zero};

use crate::exactmath::Rational;

/// An exact eigenvalue of `c_1 ⋆_0`.
///
/// `RootScaled { order: ρ, radicand: D, phase: k }` stands for
/// `ρ · D^{1/ρ} · e^{2πik/ρ}` and is only used with `ρ >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Eigenvalue {
    Integer(BigInt),
    RootScaled { order: u32, radicand: BigInt, phase: u32 },
}

impl Eigenvalue {
    pub fn integer(v: impl Into<BigInt>) -> Self {
        Eigenvalue::Integer(v.into())
    }

    /// Phase is reduced modulo `order`. Panics on `order < 2` or a
    /// non-positive radicand.
    pub fn root_scaled(order: u32, radicand: BigInt, phase: u64) -> Self {
        assert!(order >= 2, "RootScaled needs order >= 2");
        assert!(radicand.is_positive(), "RootScaled needs a positive radicand");
        Eigenvalue::RootScaled {
            order,
            radicand,
            phase: (phase % u64::from(order)) as u32,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Eigenvalue::Integer(v) if v.is_zero())
    }

    pub fn modulus(&self) -> Modulus {
        match self {
            Eigenvalue::Integer(v) => Modulus::Integer(v.abs()),
            Eigenvalue::RootScaled { order, radicand, .. } => Modulus::Radical {
                order: *order,
                radicand: radicand.clone(),
            },
        }
    }

    /// Argument as a reduced fraction `(k, m)` of a full turn; `None` for zero.
    pub fn turn(&self) -> Option<(u64, u64)> {
        match self {
            Eigenvalue::Integer(v) if v.is_zero() => None,
            Eigenvalue::Integer(v) if v.is_positive() => Some((0, 1)),
            Eigenvalue::Integer(_) => Some((1, 2)),
            Eigenvalue::RootScaled { order, phase, .. } => {
                let (k, m) = (u64::from(*phase), u64::from(*order));
                let g = k.gcd(&m);
                Some((k / g, m / g))
            }
        }
    }

    /// Exact equality of complex values, across representations.
    pub fn value_eq(&self, other: &Eigenvalue) -> bool {
        match (self.turn(), other.turn()) {
            (None, None) => true,
            (Some(a), Some(b)) => a == b && self.modulus() == other.modulus(),
            _ => false,
        }
    }

    /// Whether `self / radius` is a `rho`-th root of unity, i.e. `|self|`
    /// equals `radius` and `rho` times the turn is an integer.
    pub fn is_root_of_unity_multiple(&self, radius: &Modulus, rho: u64) -> bool {
        match self.turn() {
            None => false,
            Some((k, m)) => self.modulus() == *radius && (rho * k).is_multiple_of(m),
        }
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eigenvalue::Integer(v) => write!(f, "{v}"),
            Eigenvalue::RootScaled { order, radicand, phase } => {
                write!(f, "{order}*{radicand}^(1/{order})")?;
                if *phase != 0 {
                    write!(f, "*exp(2*pi*i*{phase}/{order})")?;
                }
                Ok(())
            }
        }
    }
}

/// A non-negative real of the form `n` or `ρ · D^{1/ρ}`.
#[derive(Debug, Clone)]
pub enum Modulus {
    Integer(BigInt),
    Radical { order: u32, radicand: BigInt },
}

impl Modulus {
    /// `(k, B)` with value `B^{1/k}`.
    pub fn power_form(&self) -> (u32, BigInt) {
        match self {
            Modulus::Integer(v) => (1, v.clone()),
            Modulus::Radical { order, radicand } => {
                (*order, pow(BigInt::from(*order), *order as usize) * radicand)
            }
        }
    }

    /// Collapses `ρ · D^{1/ρ}` to an integer when `ρ^ρ D` is a perfect
    /// `ρ`-th power.
    pub fn normalized(&self) -> Modulus {
        match self.exact_integer() {
            Some(v) => Modulus::Integer(v),
            None => self.clone(),
        }
    }

    pub fn exact_integer(&self) -> Option<BigInt> {
        let (k, base) = self.power_form();
        let root = base.nth_root(k);
        (pow(root.clone(), k as usize) == base).then_some(root)
    }

    pub fn cmp_integer(&self, n: &BigInt) -> Ordering {
        self.cmp(&Modulus::Integer(n.clone()))
    }

    /// Compares against a positive rational `q = a/b` via `B·b^k` vs `a^k`.
    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        let (k, base) = self.power_form();
        let lhs = base * pow(q.denom().clone(), k as usize);
        let rhs = pow(q.numer().clone(), k as usize);
        lhs.cmp(&rhs)
    }

    /// Both sides of `self > n` raised to the common power, as used for
    /// integer witnesses: `(B, n^k)`.
    pub fn powered_against(&self, n: &BigInt) -> (BigInt, BigInt) {
        let (k, base) = self.power_form();
        (base, pow(n.clone(), k as usize))
    }
}

impl PartialEq for Modulus {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Modulus {}

impl PartialOrd for Modulus {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Modulus {
    /// `B1^{1/k1}` vs `B2^{1/k2}` compared as `B1^{k2}` vs `B2^{k1}`.
    fn cmp(&self, other: &Self) -> Ordering {
        let (k1, b1) = self.power_form();
        let (k2, b2) = other.power_form();
        if k1 == k2 {
            return b1.cmp(&b2);
        }
        pow(b1, k2 as usize).cmp(&pow(b2, k1 as usize))
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Modulus::Integer(v) => write!(f, "{v}"),
            Modulus::Radical { order, radicand } => write!(f, "{order}*{radicand}^(1/{order})"),
        }
    }
}
