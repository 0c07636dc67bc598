use std::fmt;
use std::str::FromStr;

use crate::ranking::Proposition;

use super::GenericError;

/// Largest framework the compact world space is built for (`3^12` worlds).
pub const MAX_GENERIC_ARGUMENTS: usize = 12;

/// State of one argument's atoms `X_a`, `Y_a` in a compact world.
///
/// When `X_a` is false the value of `Y_a` is irrelevant to every
/// proposition built from `φ_a = X_a` and `ψ_a = X_a ∧ Y_a`, so the two
/// assignments collapse into one state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenericState {
    XFalse,
    XY,
    XNotY,
}

impl GenericState {
    pub const ALL: [GenericState; 3] =
        [GenericState::XFalse, GenericState::XY, GenericState::XNotY];

    fn digit(self) -> usize {
        match self {
            GenericState::XFalse => 0,
            GenericState::XY => 1,
            GenericState::XNotY => 2,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            GenericState::XFalse => '-',
            GenericState::XY => 'Y',
            GenericState::XNotY => 'N',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            '-' => Some(GenericState::XFalse),
            'Y' | 'y' => Some(GenericState::XY),
            'N' | 'n' => Some(GenericState::XNotY),
            _ => None,
        }
    }
}

/// One state per argument, in argument order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenericWorld(pub Vec<GenericState>);

impl GenericWorld {
    pub fn all(n: usize, state: GenericState) -> Self {
        GenericWorld(vec![state; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Bit masks `(X true, X ∧ Y true)`.
    pub fn masks(&self) -> (u64, u64) {
        let mut x = 0;
        let mut xy = 0;
        for (i, s) in self.0.iter().enumerate() {
            match s {
                GenericState::XFalse => {}
                GenericState::XY => {
                    x |= 1 << i;
                    xy |= 1 << i;
                }
                GenericState::XNotY => x |= 1 << i,
            }
        }
        (x, xy)
    }
}

impl fmt::Display for GenericWorld {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for GenericWorld {
    type Err = char;

    /// Parses a string of `-`, `Y`, `N` symbols; the error is the first
    /// offending character.
    fn from_str(s: &str) -> Result<Self, char> {
        s.chars()
            .map(|c| GenericState::from_symbol(c).ok_or(c))
            .collect::<Result<Vec<_>, _>>()
            .map(GenericWorld)
    }
}

/// The `3^n` compact worlds of an `n`-argument generic instantiation.
///
/// World index `w` assigns argument `i` the state given by the `i`-th
/// base-3 digit of `w` (least significant first): 0 = `X` false,
/// 1 = `X ∧ Y`, 2 = `X ∧ ¬Y`. World 0 is the all-false world.
#[derive(Debug, Clone)]
pub struct GenericSpace {
    arguments: usize,
    masks: Vec<(u64, u64)>,
}

impl GenericSpace {
    pub fn new(arguments: usize) -> Result<Self, GenericError> {
        if arguments > MAX_GENERIC_ARGUMENTS {
            return Err(GenericError::TooLarge(arguments));
        }
        let len = 3usize.pow(arguments as u32);
        let mut masks = Vec::with_capacity(len);
        for w in 0..len {
            let mut rest = w;
            let (mut x, mut xy) = (0u64, 0u64);
            for i in 0..arguments {
                match rest % 3 {
                    1 => {
                        x |= 1 << i;
                        xy |= 1 << i;
                    }
                    2 => x |= 1 << i,
                    _ => {}
                }
                rest /= 3;
            }
            masks.push((x, xy));
        }
        Ok(GenericSpace { arguments, masks })
    }

    pub fn arguments(&self) -> usize {
        self.arguments
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `(X true, X ∧ Y true)` masks of world `w`.
    pub fn masks(&self, w: usize) -> (u64, u64) {
        self.masks[w]
    }

    pub fn world(&self, w: usize) -> GenericWorld {
        let (x, xy) = self.masks[w];
        GenericWorld(
            (0..self.arguments)
                .map(|i| {
                    if xy & (1 << i) != 0 {
                        GenericState::XY
                    } else if x & (1 << i) != 0 {
                        GenericState::XNotY
                    } else {
                        GenericState::XFalse
                    }
                })
                .collect(),
        )
    }

    pub fn index_of(&self, world: &GenericWorld) -> Option<usize> {
        if world.len() != self.arguments {
            return None;
        }
        Some(
            world
                .0
                .iter()
                .rev()
                .fold(0usize, |acc, s| acc * 3 + s.digit()),
        )
    }

    pub fn worlds(&self) -> impl Iterator<Item = GenericWorld> + '_ {
        (0..self.len()).map(|w| self.world(w))
    }

    /// `φ_a = X_a`
    pub fn phi(&self, a: usize) -> Proposition {
        Proposition::from_fn(self.len(), |w| self.masks[w].0 & (1 << a) != 0)
    }

    /// `ψ_a = X_a ∧ Y_a`
    pub fn psi(&self, a: usize) -> Proposition {
        Proposition::from_fn(self.len(), |w| self.masks[w].1 & (1 << a) != 0)
    }
}
