use std::fmt;
use std::ops::{BitAnd, BitOr, Not};

use fixedbitset::FixedBitSet;

/// Largest number of atoms a full assignment space may have.
pub const MAX_ATOMS: usize = 24;

/// A proposition over a finite world space, given extensionally as the set
/// of worlds where it holds.
///
/// All boolean operations require both operands to live in a space of the
/// same size and panic otherwise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Proposition {
    worlds: FixedBitSet,
}

impl Proposition {
    /// The tautology over `space_len` worlds.
    pub fn top(space_len: usize) -> Self {
        let mut worlds = FixedBitSet::with_capacity(space_len);
        worlds.insert_range(..);
        Proposition { worlds }
    }

    /// The contradiction over `space_len` worlds.
    pub fn bottom(space_len: usize) -> Self {
        Proposition {
            worlds: FixedBitSet::with_capacity(space_len),
        }
    }

    pub fn from_fn(space_len: usize, mut holds: impl FnMut(usize) -> bool) -> Self {
        let mut worlds = FixedBitSet::with_capacity(space_len);
        for w in 0..space_len {
            if holds(w) {
                worlds.insert(w);
            }
        }
        Proposition { worlds }
    }

    pub fn from_worlds(space_len: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut worlds = FixedBitSet::with_capacity(space_len);
        for w in members {
            worlds.insert(w);
        }
        Proposition { worlds }
    }

    /// Number of worlds in the underlying space.
    pub fn space_len(&self) -> usize {
        self.worlds.len()
    }

    /// Number of worlds satisfying the proposition.
    pub fn count(&self) -> usize {
        self.worlds.count_ones(..)
    }

    pub fn holds_at(&self, world: usize) -> bool {
        self.worlds.contains(world)
    }

    /// Unsatisfiable on the space.
    pub fn is_empty(&self) -> bool {
        self.worlds.is_clear()
    }

    pub fn is_tautology(&self) -> bool {
        self.count() == self.space_len()
    }

    /// Every world of `self` is a world of `other`.
    pub fn entails(&self, other: &Proposition) -> bool {
        self.check_space(other);
        self.worlds.is_subset(&other.worlds)
    }

    pub fn worlds(&self) -> impl Iterator<Item = usize> + '_ {
        self.worlds.ones()
    }

    pub fn and(&self, other: &Proposition) -> Proposition {
        self.check_space(other);
        let mut worlds = self.worlds.clone();
        worlds.intersect_with(&other.worlds);
        Proposition { worlds }
    }

    pub fn or(&self, other: &Proposition) -> Proposition {
        self.check_space(other);
        let mut worlds = self.worlds.clone();
        worlds.union_with(&other.worlds);
        Proposition { worlds }
    }

    pub fn negate(&self) -> Proposition {
        let mut worlds = self.worlds.clone();
        worlds.toggle_range(..);
        Proposition { worlds }
    }

    /// In-place conjunction.
    pub fn and_assign(&mut self, other: &Proposition) {
        self.check_space(other);
        self.worlds.intersect_with(&other.worlds);
    }

    /// In-place conjunction with the negation of `other`.
    pub fn and_not_assign(&mut self, other: &Proposition) {
        self.check_space(other);
        self.worlds.difference_with(&other.worlds);
    }

    fn check_space(&self, other: &Proposition) {
        assert_eq!(
            self.space_len(),
            other.space_len(),
            "propositions over different world spaces"
        );
    }
}

impl fmt::Debug for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.worlds.ones()).finish()
    }
}

impl BitAnd for &Proposition {
    type Output = Proposition;
    fn bitand(self, rhs: &Proposition) -> Proposition {
        self.and(rhs)
    }
}

impl BitAnd for Proposition {
    type Output = Proposition;
    fn bitand(mut self, rhs: Proposition) -> Proposition {
        self.and_assign(&rhs);
        self
    }
}

impl BitOr for &Proposition {
    type Output = Proposition;
    fn bitor(self, rhs: &Proposition) -> Proposition {
        self.or(rhs)
    }
}

impl BitOr for Proposition {
    type Output = Proposition;
    fn bitor(self, rhs: Proposition) -> Proposition {
        self.or(&rhs)
    }
}

impl Not for &Proposition {
    type Output = Proposition;
    fn not(self) -> Proposition {
        self.negate()
    }
}

impl Not for Proposition {
    type Output = Proposition;
    fn not(self) -> Proposition {
        self.negate()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WorldSpaceError {
    #[error("duplicate atom `{0}`")]
    DuplicateAtom(String),
    #[error("{0} atoms requested, at most {MAX_ATOMS} supported")]
    TooManyAtoms(usize),
}

/// All truth assignments over a list of named atoms. World `w` makes atom
/// `i` true iff bit `i` of `w` is set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorldSpace {
    atoms: Vec<String>,
}

impl WorldSpace {
    pub fn new<S: Into<String>>(
        atoms: impl IntoIterator<Item = S>,
    ) -> Result<Self, WorldSpaceError> {
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        if atoms.len() > MAX_ATOMS {
            return Err(WorldSpaceError::TooManyAtoms(atoms.len()));
        }
        for (i, a) in atoms.iter().enumerate() {
            if atoms[..i].contains(a) {
                return Err(WorldSpaceError::DuplicateAtom(a.clone()));
            }
        }
        Ok(WorldSpace { atoms })
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    /// Number of worlds, `2^atoms`.
    pub fn len(&self) -> usize {
        1usize << self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn atom_index(&self, name: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a == name)
    }

    /// The proposition "atom `name` is true".
    pub fn atom(&self, name: &str) -> Option<Proposition> {
        self.atom_index(name).map(|i| self.atom_at(i))
    }

    pub fn atom_at(&self, index: usize) -> Proposition {
        Proposition::from_fn(self.len(), |w| w & (1 << index) != 0)
    }

    pub fn top(&self) -> Proposition {
        Proposition::top(self.len())
    }

    pub fn bottom(&self) -> Proposition {
        Proposition::bottom(self.len())
    }

    /// Truth value of atom `index` at `world`.
    pub fn value(&self, world: usize, index: usize) -> bool {
        world & (1 << index) != 0
    }
}
