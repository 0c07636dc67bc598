use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_rational::Ratio;

/// An extended non-negative rational: a finite value or `Top` (infinity).
///
/// `Top` absorbs addition and is the neutral element of `min`. The derived
/// ordering puts every finite value below `Top`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rank {
    Finite(Ratio<u64>),
    Top,
}

impl Rank {
    pub const ZERO: Rank = Rank::Finite(Ratio::new_raw(0, 1));
    pub const ONE: Rank = Rank::Finite(Ratio::new_raw(1, 1));
    pub const TOP: Rank = Rank::Top;

    pub fn integer(n: u64) -> Rank {
        Rank::Finite(Ratio::from_integer(n))
    }

    /// `numer / denom`; panics if `denom` is zero.
    pub fn ratio(numer: u64, denom: u64) -> Rank {
        Rank::Finite(Ratio::new(numer, denom))
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Rank::Finite(_))
    }

    pub fn is_top(self) -> bool {
        matches!(self, Rank::Top)
    }

    pub fn is_zero(self) -> bool {
        self == Rank::ZERO
    }

    /// The integer value, if the rank is a finite integer.
    pub fn as_integer(self) -> Option<u64> {
        match self {
            Rank::Finite(r) if r.is_integer() => Some(r.to_integer()),
            _ => None,
        }
    }

    /// `self - other` for finite `self >= other`. `Top - finite` is `Top`;
    /// anything minus `Top` is undefined and yields `None`.
    pub fn checked_sub(self, other: Rank) -> Option<Rank> {
        match (self, other) {
            (_, Rank::Top) => None,
            (Rank::Top, Rank::Finite(_)) => Some(Rank::Top),
            (Rank::Finite(a), Rank::Finite(b)) if a >= b => Some(Rank::Finite(a - b)),
            _ => None,
        }
    }
}

impl Default for Rank {
    fn default() -> Self {
        Rank::ZERO
    }
}

impl From<u64> for Rank {
    fn from(n: u64) -> Self {
        Rank::integer(n)
    }
}

impl Add for Rank {
    type Output = Rank;

    fn add(self, rhs: Rank) -> Rank {
        match (self, rhs) {
            (Rank::Finite(a), Rank::Finite(b)) => Rank::Finite(a + b),
            _ => Rank::Top,
        }
    }
}

impl std::iter::Sum for Rank {
    fn sum<I: Iterator<Item = Rank>>(iter: I) -> Rank {
        iter.fold(Rank::ZERO, Add::add)
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rank::Top => f.write_str("inf"),
            Rank::Finite(r) if r.is_integer() => write!(f, "{}", r.to_integer()),
            Rank::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rank `{0}`: expected a non-negative integer, `p/q`, or `inf`")]
pub struct ParseRankError(pub String);

impl FromStr for Rank {
    type Err = ParseRankError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let err = || ParseRankError(s.to_string());
        match t {
            "inf" | "INF" | "Inf" | "∞" | "top" | "TOP" => return Ok(Rank::Top),
            _ => {}
        }
        match t.split_once('/') {
            Some((p, q)) => {
                let p: u64 = p.trim().parse().map_err(|_| err())?;
                let q: u64 = q.trim().parse().map_err(|_| err())?;
                if q == 0 {
                    return Err(err());
                }
                Ok(Rank::ratio(p, q))
            }
            None => t.parse::<u64>().map(Rank::integer).map_err(|_| err()),
        }
    }
}
