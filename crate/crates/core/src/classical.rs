//! Reference Dung semantics, computed by enumerating conflict-free
//! candidates. Intended for desk-sized frameworks (up to ~20 arguments).

use std::fmt;
use std::str::FromStr;

use crate::framework::{sort_extensions, ArgumentSet, ArgumentationFramework};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semantics {
    Admissible,
    Grounded,
    Complete,
    Preferred,
    Stable,
    Stage,
    SemiStable,
}

impl Semantics {
    pub const ALL: [Semantics; 7] = [
        Semantics::Admissible,
        Semantics::Grounded,
        Semantics::Complete,
        Semantics::Preferred,
        Semantics::Stable,
        Semantics::Stage,
        Semantics::SemiStable,
    ];

    /// The extensions of `framework`, in canonical order.
    pub fn extensions(self, framework: &ArgumentationFramework) -> Vec<ArgumentSet> {
        match self {
            Semantics::Admissible => admissible_sets(framework),
            Semantics::Grounded => vec![grounded(framework)],
            Semantics::Complete => complete(framework),
            Semantics::Preferred => preferred(framework),
            Semantics::Stable => stable(framework),
            Semantics::Stage => stage(framework),
            Semantics::SemiStable => semi_stable(framework),
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Semantics::Admissible => "AD",
            Semantics::Grounded => "GR",
            Semantics::Complete => "CO",
            Semantics::Preferred => "PR",
            Semantics::Stable => "ST",
            Semantics::Stage => "STG",
            Semantics::SemiStable => "SST",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for Semantics {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Semantics::ALL
            .into_iter()
            .find(|sem| sem.short_name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown semantics `{s}`"))
    }
}

/// Arguments all of whose attackers are attacked by `set`.
pub fn defended_by(framework: &ArgumentationFramework, set: ArgumentSet) -> ArgumentSet {
    let hit = framework.attack_image(set);
    (0..framework.len())
        .filter(|&a| framework.attackers_of(a).is_subset(hit))
        .collect()
}

pub fn is_admissible(framework: &ArgumentationFramework, set: ArgumentSet) -> bool {
    framework.is_conflict_free(set) && set.is_subset(defended_by(framework, set))
}

pub fn is_stable(framework: &ArgumentationFramework, set: ArgumentSet) -> bool {
    framework.is_conflict_free(set)
        && framework.arguments().difference(set) == framework.attack_image(set)
}

/// Least fixed point of the characteristic function, iterated from the
/// empty set.
pub fn grounded(framework: &ArgumentationFramework) -> ArgumentSet {
    let mut current = ArgumentSet::EMPTY;
    loop {
        let next = defended_by(framework, current);
        if next == current {
            return current;
        }
        current = next;
    }
}

pub fn admissible_sets(framework: &ArgumentationFramework) -> Vec<ArgumentSet> {
    let mut out: Vec<ArgumentSet> = framework
        .conflict_free_sets(framework.arguments())
        .filter(|&s| is_admissible(framework, s))
        .collect();
    sort_extensions(&mut out);
    out
}

pub fn complete(framework: &ArgumentationFramework) -> Vec<ArgumentSet> {
    let mut out: Vec<ArgumentSet> = framework
        .conflict_free_sets(framework.arguments())
        .filter(|&s| is_admissible(framework, s) && defended_by(framework, s) == s)
        .collect();
    sort_extensions(&mut out);
    out
}

pub fn preferred(framework: &ArgumentationFramework) -> Vec<ArgumentSet> {
    inclusion_maximal(admissible_sets(framework))
}

pub fn stable(framework: &ArgumentationFramework) -> Vec<ArgumentSet> {
    let mut out: Vec<ArgumentSet> = framework
        .conflict_free_sets(framework.arguments())
        .filter(|&s| is_stable(framework, s))
        .collect();
    sort_extensions(&mut out);
    out
}

pub fn stage(framework: &ArgumentationFramework) -> Vec<ArgumentSet> {
    range_maximal(
        framework,
        framework
            .conflict_free_sets(framework.arguments())
            .collect(),
    )
}

pub fn semi_stable(framework: &ArgumentationFramework) -> Vec<ArgumentSet> {
    range_maximal(framework, admissible_sets(framework))
}

/// Keeps the members not strictly contained in another member.
pub fn inclusion_maximal(mut sets: Vec<ArgumentSet>) -> Vec<ArgumentSet> {
    sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut kept: Vec<ArgumentSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    sort_extensions(&mut kept);
    kept
}

fn range_maximal(
    framework: &ArgumentationFramework,
    candidates: Vec<ArgumentSet>,
) -> Vec<ArgumentSet> {
    let ranges: Vec<ArgumentSet> = candidates.iter().map(|&s| framework.range(s)).collect();
    let mut out: Vec<ArgumentSet> = candidates
        .iter()
        .zip(&ranges)
        .filter(|&(_, &r)| !ranges.iter().any(|&other| r.is_subset(other) && r != other))
        .map(|(s, _)| *s)
        .collect();
    sort_extensions(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn af(args: &[&str], attacks: &[(&str, &str)]) -> ArgumentationFramework {
        ArgumentationFramework::new(args.iter().copied(), attacks.iter().copied()).unwrap()
    }

    fn sets(f: &ArgumentationFramework, groups: &[&[&str]]) -> Vec<ArgumentSet> {
        let mut v: Vec<_> = groups
            .iter()
            .map(|g| f.set_of(g.iter().copied()).unwrap())
            .collect();
        sort_extensions(&mut v);
        v
    }

    #[test]
    fn admissibility() {
        let chain = af(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        assert!(is_admissible(&chain, chain.set_of(["a", "c"]).unwrap()));
        assert!(is_admissible(&chain, ArgumentSet::EMPTY));
        let loop3 = af(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")]);
        assert!(!is_admissible(&loop3, loop3.set_of(["a"]).unwrap()));
        assert_eq!(admissible_sets(&loop3), vec![ArgumentSet::EMPTY]);
    }

    #[test]
    fn grounded_examples() {
        let chain = af(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        assert_eq!(grounded(&chain), chain.set_of(["a", "c"]).unwrap());
        let free = af(&["a", "b"], &[]);
        assert_eq!(grounded(&free), free.arguments());
        let two = af(&["a", "b"], &[("a", "b"), ("b", "a")]);
        assert_eq!(grounded(&two), ArgumentSet::EMPTY);
    }

    #[test]
    fn preferred_examples() {
        let chain = af(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        assert_eq!(preferred(&chain), sets(&chain, &[&["a", "c"]]));
        let loop3 = af(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")]);
        assert_eq!(preferred(&loop3), vec![ArgumentSet::EMPTY]);
        let two = af(&["a", "b"], &[("a", "b"), ("b", "a")]);
        assert_eq!(preferred(&two), sets(&two, &[&["a"], &["b"]]));
    }

    #[test]
    fn stable_examples() {
        let from2 = af(&["a", "b", "c"], &[("b", "a"), ("a", "b"), ("b", "c")]);
        assert_eq!(stable(&from2), sets(&from2, &[&["b"], &["a", "c"]]));
        let on2 = af(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "b")]);
        assert_eq!(stable(&on2), sets(&on2, &[&["a", "c"]]));
        let selfloop = af(&["a"], &[("a", "a")]);
        assert!(stable(&selfloop).is_empty());
    }

    #[test]
    fn stage_and_semi_stable_examples() {
        let loop31 = af(
            &["a", "b", "c"],
            &[("a", "a"), ("a", "b"), ("b", "c"), ("c", "a")],
        );
        assert!(stage(&loop31).contains(&loop31.set_of(["c"]).unwrap()));
        let free = af(&["a", "b", "c"], &[]);
        assert_eq!(stage(&free), vec![free.arguments()]);
        assert_eq!(semi_stable(&free), vec![free.arguments()]);
        let two = af(&["a", "b"], &[("a", "b"), ("b", "a")]);
        assert_eq!(stage(&two), sets(&two, &[&["a"], &["b"]]));
    }

    #[test]
    fn complete_contains_grounded() {
        let from2 = af(&["a", "b", "c"], &[("b", "a"), ("a", "b"), ("b", "c")]);
        let co = complete(&from2);
        assert_eq!(co[0], grounded(&from2));
        assert_eq!(co, sets(&from2, &[&[], &["b"], &["a", "c"]]));
    }

    #[test]
    fn semantics_tags_parse() {
        for sem in Semantics::ALL {
            assert_eq!(sem.short_name().parse::<Semantics>().unwrap(), sem);
        }
        assert!("XX".parse::<Semantics>().is_err());
    }
}
