//! Dung-style argumentation frameworks and the set primitives shared by
//! every semantics in this crate.
//!
//! Arguments are named by strings but indexed densely in declaration order,
//! so argument sets are plain 64-bit masks.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use thiserror::Error;

/// Largest framework the bit-set representation can hold.
pub const MAX_ARGUMENTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameworkError {
    #[error("duplicate argument `{0}`")]
    DuplicateArgument(String),
    #[error("attack mentions undeclared argument `{0}`")]
    UnknownArgument(String),
    #[error("framework has {0} arguments, at most {MAX_ARGUMENTS} are supported")]
    TooManyArguments(usize),
    #[error("renaming is not a bijection: {0}")]
    NotABijection(String),
}

/// A subset of a framework's arguments, stored as a bit mask over argument
/// indices.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArgumentSet(u64);

impl ArgumentSet {
    pub const EMPTY: ArgumentSet = ArgumentSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ArgumentSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ARGUMENTS);
        if n == MAX_ARGUMENTS {
            ArgumentSet(u64::MAX)
        } else {
            ArgumentSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(index: usize) -> Self {
        ArgumentSet(1u64 << index)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(ArgumentSet::EMPTY, |acc, i| acc.with(i))
    }

    pub fn contains(self, index: usize) -> bool {
        index < MAX_ARGUMENTS && self.0 & (1u64 << index) != 0
    }

    #[must_use]
    pub fn with(self, index: usize) -> Self {
        ArgumentSet(self.0 | (1u64 << index))
    }

    #[must_use]
    pub fn without(self, index: usize) -> Self {
        ArgumentSet(self.0 & !(1u64 << index))
    }

    pub fn insert(&mut self, index: usize) {
        self.0 |= 1u64 << index;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        ArgumentSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ArgumentSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ArgumentSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Member indices in ascending order.
    pub fn iter(self) -> Indices {
        Indices(self.0)
    }

    /// Every subset of `self`, each exactly once (no particular order).
    pub fn subsets(self) -> Subsets {
        Subsets {
            universe: self.0,
            next: Some(0),
        }
    }

    /// Total order used for all extension listings: by size, then by the
    /// ascending list of member indices.
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl FromIterator<usize> for ArgumentSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        ArgumentSet::from_indices(iter)
    }
}

impl IntoIterator for ArgumentSet {
    type Item = usize;
    type IntoIter = Indices;

    fn into_iter(self) -> Indices {
        self.iter()
    }
}

#[derive(Debug, Clone)]
pub struct Indices(u64);

impl Iterator for Indices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Indices {}

/// Subset walk using the `(s - u) & u` trick.
#[derive(Debug, Clone)]
pub struct Subsets {
    universe: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ArgumentSet;

    fn next(&mut self) -> Option<ArgumentSet> {
        let current = self.next?;
        let following = current.wrapping_sub(self.universe) & self.universe;
        self.next = if following == 0 {
            None
        } else {
            Some(following)
        };
        Some(ArgumentSet(current))
    }
}

/// Sorts extensions into canonical order and removes duplicates.
pub fn sort_extensions(extensions: &mut Vec<ArgumentSet>) {
    extensions.sort_by(ArgumentSet::canonical_cmp);
    extensions.dedup();
}

/// A finite argumentation framework `(arguments, attacks)`.
///
/// Immutable after construction. Iteration order of arguments is the
/// declaration order.
#[derive(Debug, Clone)]
pub struct ArgumentationFramework {
    names: Vec<String>,
    index: HashMap<String, usize>,
    attacks: BTreeSet<(usize, usize)>,
    attackers: Vec<ArgumentSet>,
    targets: Vec<ArgumentSet>,
}

impl PartialEq for ArgumentationFramework {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.attacks == other.attacks
    }
}

impl Eq for ArgumentationFramework {}

impl ArgumentationFramework {
    /// Builds a framework from argument names and attacks given by name.
    ///
    /// Duplicate attacks collapse; self-attacks are allowed.
    pub fn new<A, S, T>(arguments: A, attacks: T) -> Result<Self, FrameworkError>
    where
        A: IntoIterator<Item = S>,
        S: Into<String>,
        T: IntoIterator<Item = (S, S)>,
    {
        let names: Vec<String> = arguments.into_iter().map(Into::into).collect();
        if names.len() > MAX_ARGUMENTS {
            return Err(FrameworkError::TooManyArguments(names.len()));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(FrameworkError::DuplicateArgument(name.clone()));
            }
        }
        let mut pairs = BTreeSet::new();
        for (from, to) in attacks {
            let (from, to): (String, String) = (from.into(), to.into());
            let a = *index
                .get(&from)
                .ok_or_else(|| FrameworkError::UnknownArgument(from.clone()))?;
            let b = *index
                .get(&to)
                .ok_or_else(|| FrameworkError::UnknownArgument(to.clone()))?;
            pairs.insert((a, b));
        }
        Ok(Self::from_parts(names, index, pairs))
    }

    /// Builds a framework from names and index pairs. Panics on out-of-range
    /// indices; intended for generators that already work with indices.
    pub fn from_indices(
        names: Vec<String>,
        attacks: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, FrameworkError> {
        if names.len() > MAX_ARGUMENTS {
            return Err(FrameworkError::TooManyArguments(names.len()));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(FrameworkError::DuplicateArgument(name.clone()));
            }
        }
        let n = names.len();
        let pairs: BTreeSet<(usize, usize)> = attacks
            .into_iter()
            .inspect(|&(a, b)| assert!(a < n && b < n, "attack ({a},{b}) out of range"))
            .collect();
        Ok(Self::from_parts(names, index, pairs))
    }

    fn from_parts(
        names: Vec<String>,
        index: HashMap<String, usize>,
        attacks: BTreeSet<(usize, usize)>,
    ) -> Self {
        let n = names.len();
        let mut attackers = vec![ArgumentSet::EMPTY; n];
        let mut targets = vec![ArgumentSet::EMPTY; n];
        for &(a, b) in &attacks {
            targets[a].insert(b);
            attackers[b].insert(a);
        }
        ArgumentationFramework {
            names,
            index,
            attacks,
            attackers,
            targets,
        }
    }

    pub fn empty() -> Self {
        Self::from_parts(Vec::new(), HashMap::new(), BTreeSet::new())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn arguments(&self) -> ArgumentSet {
        ArgumentSet::full(self.len())
    }

    /// Attack pairs `(attacker, target)` in ascending index order.
    pub fn attacks(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.attacks.iter().copied()
    }

    pub fn attack_count(&self) -> usize {
        self.attacks.len()
    }

    pub fn attacks_between(&self, a: usize, b: usize) -> bool {
        self.targets[a].contains(b)
    }

    /// Attack is present one way only: `a ▷ b` and not `b ▷ a`.
    pub fn attacks_one_sided(&self, a: usize, b: usize) -> bool {
        self.attacks_between(a, b) && !self.attacks_between(b, a)
    }

    pub fn attackers_of(&self, a: usize) -> ArgumentSet {
        self.attackers[a]
    }

    pub fn targets_of(&self, a: usize) -> ArgumentSet {
        self.targets[a]
    }

    pub fn is_self_attacking(&self, a: usize) -> bool {
        self.targets[a].contains(a)
    }

    /// Resolves names to a set. Unknown names yield `None`.
    pub fn set_of<'n>(&self, names: impl IntoIterator<Item = &'n str>) -> Option<ArgumentSet> {
        names
            .into_iter()
            .map(|n| self.index_of(n))
            .try_fold(ArgumentSet::EMPTY, |acc, i| i.map(|i| acc.with(i)))
    }

    /// Member names of `set`, in declaration order.
    pub fn names_of(&self, set: ArgumentSet) -> Vec<&str> {
        set.iter().map(|i| self.name(i)).collect()
    }

    /// Member names of `set` as an owned, name-sorted set. Used to compare
    /// extensions across frameworks with different index layouts.
    pub fn name_set(&self, set: ArgumentSet) -> BTreeSet<String> {
        set.iter().map(|i| self.names[i].clone()).collect()
    }

    /// The arguments that do not attack themselves.
    pub fn non_self_attacking(&self) -> ArgumentSet {
        (0..self.len())
            .filter(|&a| !self.is_self_attacking(a))
            .collect()
    }

    pub fn is_conflict_free(&self, set: ArgumentSet) -> bool {
        set.iter().all(|a| self.targets[a].is_disjoint(set))
    }

    /// Arguments attacked by some member of `set`.
    pub fn attack_image(&self, set: ArgumentSet) -> ArgumentSet {
        set.iter()
            .fold(ArgumentSet::EMPTY, |acc, a| acc.union(self.targets[a]))
    }

    /// Arguments attacking some member of `set`.
    pub fn attack_preimage(&self, set: ArgumentSet) -> ArgumentSet {
        set.iter()
            .fold(ArgumentSet::EMPTY, |acc, a| acc.union(self.attackers[a]))
    }

    /// `set` together with everything it attacks.
    pub fn range(&self, set: ArgumentSet) -> ArgumentSet {
        set.union(self.attack_image(set))
    }

    /// Whether `a` may join `set` without creating a conflict.
    pub fn compatible(&self, set: ArgumentSet, a: usize) -> bool {
        !self.is_self_attacking(a)
            && self.targets[a].is_disjoint(set)
            && self.attackers[a].is_disjoint(set)
    }

    /// Lazily enumerates the conflict-free subsets of `universe`.
    ///
    /// Backtracking over ascending argument index with the inclusion branch
    /// explored first; a branch is cut as soon as the partial set conflicts.
    pub fn conflict_free_sets(&self, universe: ArgumentSet) -> ConflictFreeSets<'_> {
        let order: Vec<usize> = universe.iter().collect();
        ConflictFreeSets {
            framework: self,
            order,
            stack: vec![(ArgumentSet::EMPTY, 0)],
        }
    }

    /// Maximal conflict-free subsets of `universe`, in canonical order.
    pub fn maximal_conflict_free(&self, universe: ArgumentSet) -> Vec<ArgumentSet> {
        let mut out: Vec<ArgumentSet> = self
            .conflict_free_sets(universe)
            .filter(|&s| {
                universe
                    .difference(s)
                    .iter()
                    .all(|a| !self.compatible(s, a))
            })
            .collect();
        sort_extensions(&mut out);
        out
    }

    /// The framework restricted to `keep`: arguments in `keep` (declaration
    /// order preserved) and the attacks among them.
    pub fn restrict(&self, keep: ArgumentSet) -> ArgumentationFramework {
        let kept: Vec<usize> = keep.iter().filter(|&i| i < self.len()).collect();
        let mut remap = vec![usize::MAX; self.len()];
        for (new, &old) in kept.iter().enumerate() {
            remap[old] = new;
        }
        let names: Vec<String> = kept.iter().map(|&i| self.names[i].clone()).collect();
        let index = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        let attacks = self
            .attacks
            .iter()
            .filter(|&&(a, b)| keep.contains(a) && keep.contains(b))
            .map(|&(a, b)| (remap[a], remap[b]))
            .collect();
        Self::from_parts(names, index, attacks)
    }

    /// Renames every argument through `mapping`, which must be total on the
    /// framework's arguments and injective.
    pub fn rename(
        &self,
        mapping: &HashMap<String, String>,
    ) -> Result<ArgumentationFramework, FrameworkError> {
        let mut seen = HashSet::with_capacity(self.len());
        let mut names = Vec::with_capacity(self.len());
        for name in &self.names {
            let image = mapping
                .get(name)
                .ok_or_else(|| FrameworkError::NotABijection(format!("`{name}` has no image")))?;
            if !seen.insert(image.clone()) {
                return Err(FrameworkError::NotABijection(format!(
                    "`{image}` is the image of two arguments"
                )));
            }
            names.push(image.clone());
        }
        let index = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        Ok(Self::from_parts(names, index, self.attacks.clone()))
    }

    /// Disjoint union of two frameworks plus `bridge` attacks from the first
    /// into the second (by name).
    pub fn compose(
        first: &ArgumentationFramework,
        second: &ArgumentationFramework,
        bridge: &[(String, String)],
    ) -> Result<ArgumentationFramework, FrameworkError> {
        let offset = first.len();
        let names: Vec<String> = first.names.iter().chain(&second.names).cloned().collect();
        let mut attacks: Vec<(usize, usize)> = first
            .attacks()
            .chain(second.attacks().map(|(a, b)| (a + offset, b + offset)))
            .collect();
        for (from, to) in bridge {
            let a = first
                .index_of(from)
                .ok_or_else(|| FrameworkError::UnknownArgument(from.clone()))?;
            let b = second
                .index_of(to)
                .ok_or_else(|| FrameworkError::UnknownArgument(to.clone()))?;
            attacks.push((a, b + offset));
        }
        Self::from_indices(names, attacks)
    }

    /// Attack pairs by name, sorted. Handy for order-independent comparison.
    pub fn named_attacks(&self) -> BTreeSet<(String, String)> {
        self.attacks
            .iter()
            .map(|&(a, b)| (self.names[a].clone(), self.names[b].clone()))
            .collect()
    }

    /// Formats a set as `[a,c]` with names sorted lexicographically.
    pub fn format_set(&self, set: ArgumentSet) -> String {
        let mut names = self.names_of(set);
        names.sort_unstable();
        format!("[{}]", names.join(","))
    }
}

impl fmt::Display for ArgumentationFramework {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({{{}}}, {{", self.names.join(","))?;
        for (i, &(a, b)) in self.attacks.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}>{}", self.names[a], self.names[b])?;
        }
        write!(f, "}})")
    }
}

/// Iterator returned by [`ArgumentationFramework::conflict_free_sets`].
pub struct ConflictFreeSets<'a> {
    framework: &'a ArgumentationFramework,
    order: Vec<usize>,
    stack: Vec<(ArgumentSet, usize)>,
}

impl Iterator for ConflictFreeSets<'_> {
    type Item = ArgumentSet;

    fn next(&mut self) -> Option<ArgumentSet> {
        while let Some((set, depth)) = self.stack.pop() {
            if depth == self.order.len() {
                return Some(set);
            }
            let a = self.order[depth];
            self.stack.push((set, depth + 1));
            if self.framework.compatible(set, a) {
                self.stack.push((set.with(a), depth + 1));
            }
        }
        None
    }
}
