//! Checkers for structural principles of extension semantics.
//!
//! A semantics is any `Fn(&ArgumentationFramework) -> Vec<ArgumentSet>`;
//! JZ and the classical semantics plug in the same way. Checkers evaluate
//! one instance each and compare extensions by argument names, so they work
//! across renamings and restrictions.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::framework::{ArgumentSet, ArgumentationFramework, FrameworkError};

/// Extensions as sets of names, independent of argument indices.
pub type NamedExtensions = BTreeSet<BTreeSet<String>>;

pub fn named_extensions<S>(semantics: &S, framework: &ArgumentationFramework) -> NamedExtensions
where
    S: Fn(&ArgumentationFramework) -> Vec<ArgumentSet> + ?Sized,
{
    semantics(framework)
        .into_iter()
        .map(|e| framework.name_set(e))
        .collect()
}

/// Skeptically accepted arguments: the intersection of all extensions.
/// With no extensions at all this is every argument.
fn skeptical(framework: &ArgumentationFramework, extensions: &[ArgumentSet]) -> BTreeSet<String> {
    let meet = extensions
        .iter()
        .fold(framework.arguments(), |acc, &e| acc.intersection(e));
    framework.name_set(meet)
}

/// `sem(f(F))` equals the `f`-image of `sem(F)`.
pub fn check_isomorphy<S>(
    semantics: &S,
    framework: &ArgumentationFramework,
    mapping: &HashMap<String, String>,
) -> Result<bool, FrameworkError>
where
    S: Fn(&ArgumentationFramework) -> Vec<ArgumentSet> + ?Sized,
{
    let image = framework.rename(mapping)?;
    let expected: NamedExtensions = named_extensions(semantics, framework)
        .into_iter()
        .map(|e| e.iter().map(|n| mapping[n].clone()).collect())
        .collect();
    Ok(named_extensions(semantics, &image) == expected)
}

pub fn check_conflict_freedom<S>(semantics: &S, framework: &ArgumentationFramework) -> bool
where
    S: Fn(&ArgumentationFramework) -> Vec<ArgumentSet> + ?Sized,
{
    semantics(framework)
        .into_iter()
        .all(|e| framework.is_conflict_free(e))
}

/// Universe against which CF-maximality is judged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CfUniverse {
    /// Maximal among conflict-free subsets of the non-self-attacking
    /// arguments.
    NonSelfAttacking,
    /// Maximal among conflict-free subsets of all arguments.
    All,
}

/// Every extension is a maximal conflict-free subset of the universe.
///
/// The two universes give the same verdict: a self-attacker never belongs
/// to a conflict-free set, so maximality over all arguments and over the
/// non-self-attacking ones coincide. Both are offered so callers can state
/// which reading they check.
pub fn check_cf_maximality<S>(
    semantics: &S,
    framework: &ArgumentationFramework,
    universe: CfUniverse,
) -> bool
where
    S: Fn(&ArgumentationFramework) -> Vec<ArgumentSet> + ?Sized,
{
    let universe = match universe {
        CfUniverse::NonSelfAttacking => framework.non_self_attacking(),
        CfUniverse::All => framework.arguments(),
    };
    semantics(framework).into_iter().all(|e| {
        e.is_subset(universe)
            && framework.is_conflict_free(e)
            && universe
                .difference(e)
                .iter()
                .all(|a| !framework.compatible(e, a))
    })
}

/// No extension is a proper subset of another.
pub fn check_inclusion_maximality<S>(semantics: &S, framework: &ArgumentationFramework) -> bool
where
    S: Fn(&ArgumentationFramework) -> Vec<ArgumentSet> + ?Sized,
{
    let extensions = semantics(framework);
    extensions
        .iter()
        .all(|&e| extensions.iter().all(|&f| !(e.is_subset(f) && e != f)))
}

/// Every argument an extension defends belongs to it.
pub fn check_reinstatement<S>(semantics: &S, framework: &ArgumentationFramework) -> bool
where
    S: Fn(&ArgumentationFramework) -> Vec<ArgumentSet> + ?Sized,
{
    semantics(framework).into_iter().all(|e| {
        let defended = crate::classical::defended_by(framework, e);
        defended.is_subset(e)
    })
}

/// Compose `first` and `second` with `bridge` attacks from the first into
/// the second, and compare `sem(first)` with the projections of the
/// composite's extensions onto the first part.
///
/// Overlapping argument names are rejected.
pub fn check_directionality<S>(
    semantics: &S,
    first: &ArgumentationFramework,
    second: &ArgumentationFramework,
    bridge: &[(String, String)],
) -> Result<bool, FrameworkError>
where
    S: Fn(&ArgumentationFramework) -> Vec<ArgumentSet> + ?Sized,
{
    let composite = ArgumentationFramework::compose(first, second, bridge)?;
    let part = ArgumentSet::full(first.len());
    let projected: NamedExtensions = semantics(&composite)
        .into_iter()
        .map(|e| composite.name_set(e.intersection(part)))
        .collect();
    Ok(named_extensions(semantics, first) == projected)
}

/// Searches all unattacked parts `A₁` of `framework` (no attack from
/// outside `A₁` into it) for a directionality violation and returns the
/// first one found, in subset order.
pub fn directionality_violation<S>(
    semantics: &S,
    framework: &ArgumentationFramework,
) -> Option<ArgumentSet>
where
    S: Fn(&ArgumentationFramework) -> Vec<ArgumentSet> + ?Sized,
{
    let all = framework.arguments();
    let whole = semantics(framework);
    all.subsets().find(|&part| {
        if !framework
            .attack_image(all.difference(part))
            .is_disjoint(part)
        {
            return false;
        }
        let projected: NamedExtensions = whole
            .iter()
            .map(|&e| framework.name_set(e.intersection(part)))
            .collect();
        named_extensions(semantics, &framework.restrict(part)) != projected
    })
}

fn rejected_removals<S>(
    semantics: &S,
    framework: &ArgumentationFramework,
) -> (BTreeSet<String>, Vec<BTreeSet<String>>)
where
    S: Fn(&ArgumentationFramework) -> Vec<ArgumentSet> + ?Sized,
{
    let extensions = semantics(framework);
    let credulous = extensions
        .iter()
        .fold(ArgumentSet::EMPTY, |acc, &e| acc.union(e));
    let after = framework
        .arguments()
        .difference(credulous)
        .iter()
        .map(|a| {
            let reduced = framework.restrict(framework.arguments().without(a));
            skeptical(&reduced, &semantics(&reduced))
        })
        .collect();
    (skeptical(framework, &extensions), after)
}

/// Removing a rejected argument adds nothing to the skeptical
/// conclusions: `∩Ex(F − a) ⊆ ∩Ex(F)` for every `a ∉ ∪Ex(F)`.
pub fn check_rej_cut<S>(semantics: &S, framework: &ArgumentationFramework) -> bool
where
    S: Fn(&ArgumentationFramework) -> Vec<ArgumentSet> + ?Sized,
{
    let (before, after) = rejected_removals(semantics, framework);
    after.iter().all(|s| s.is_subset(&before))
}

/// Removing a rejected argument loses no skeptical conclusion:
/// `∩Ex(F) ⊆ ∩Ex(F − a)` for every `a ∉ ∪Ex(F)`.
pub fn check_rej_cm<S>(semantics: &S, framework: &ArgumentationFramework) -> bool
where
    S: Fn(&ArgumentationFramework) -> Vec<ArgumentSet> + ?Sized,
{
    let (before, after) = rejected_removals(semantics, framework);
    after.iter().all(|s| before.is_subset(s))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Principle {
    Isomorphy,
    ConflictFreedom,
    CfMaximality,
    CfMaximalityFull,
    InclusionMaximality,
    Reinstatement,
    Directionality,
    RejCut,
    RejCm,
}

impl Principle {
    pub const ALL: [Principle; 9] = [
        Principle::Isomorphy,
        Principle::ConflictFreedom,
        Principle::CfMaximality,
        Principle::CfMaximalityFull,
        Principle::InclusionMaximality,
        Principle::Reinstatement,
        Principle::Directionality,
        Principle::RejCut,
        Principle::RejCm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Principle::Isomorphy => "isomorphy",
            Principle::ConflictFreedom => "conflict-freedom",
            Principle::CfMaximality => "cf-maximality",
            Principle::CfMaximalityFull => "cf-maximality-full",
            Principle::InclusionMaximality => "inclusion-maximality",
            Principle::Reinstatement => "reinstatement",
            Principle::Directionality => "directionality",
            Principle::RejCut => "rej-cut",
            Principle::RejCm => "rej-cm",
        }
    }

    /// Evaluates the principle on one framework. Isomorphy is tested with
    /// a renaming that reverses the argument names and primes them;
    /// directionality with every unattacked part of the framework.
    pub fn holds<S>(self, semantics: &S, framework: &ArgumentationFramework) -> bool
    where
        S: Fn(&ArgumentationFramework) -> Vec<ArgumentSet> + ?Sized,
    {
        match self {
            Principle::Isomorphy => {
                check_isomorphy(semantics, framework, &reversing_renaming(framework))
                    .expect("reversing renaming is a bijection")
            }
            Principle::ConflictFreedom => check_conflict_freedom(semantics, framework),
            Principle::CfMaximality => {
                check_cf_maximality(semantics, framework, CfUniverse::NonSelfAttacking)
            }
            Principle::CfMaximalityFull => {
                check_cf_maximality(semantics, framework, CfUniverse::All)
            }
            Principle::InclusionMaximality => check_inclusion_maximality(semantics, framework),
            Principle::Reinstatement => check_reinstatement(semantics, framework),
            Principle::Directionality => directionality_violation(semantics, framework).is_none(),
            Principle::RejCut => check_rej_cut(semantics, framework),
            Principle::RejCm => check_rej_cm(semantics, framework),
        }
    }
}

impl fmt::Display for Principle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Maps the `i`-th argument to a primed copy of the name of the
/// `(n-1-i)`-th, so both names and their order change.
pub fn reversing_renaming(framework: &ArgumentationFramework) -> HashMap<String, String> {
    let names = framework.names();
    names
        .iter()
        .zip(names.iter().rev())
        .map(|(from, to)| (from.clone(), format!("{to}'")))
        .collect()
}

/// Verdict of every principle on one framework, in [`Principle::ALL`] order.
pub fn evaluate_all<S>(semantics: &S, framework: &ArgumentationFramework) -> Vec<(Principle, bool)>
where
    S: Fn(&ArgumentationFramework) -> Vec<ArgumentSet> + ?Sized,
{
    Principle::ALL
        .iter()
        .map(|&p| (p, p.holds(semantics, framework)))
        .collect()
}

/// Outcome of one principle over a corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusVerdict {
    pub principle: Principle,
    pub checked: usize,
    /// Indices of the frameworks on which the principle fails.
    pub failures: Vec<usize>,
}

impl CorpusVerdict {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs `principles` on every framework of `corpus` in parallel.
pub fn evaluate_corpus<S>(
    semantics: &S,
    principles: &[Principle],
    corpus: &[ArgumentationFramework],
) -> Vec<CorpusVerdict>
where
    S: Fn(&ArgumentationFramework) -> Vec<ArgumentSet> + Sync + ?Sized,
{
    let outcomes: Vec<Vec<bool>> = corpus
        .par_iter()
        .map(|f| principles.iter().map(|p| p.holds(semantics, f)).collect())
        .collect();
    principles
        .iter()
        .enumerate()
        .map(|(k, &principle)| CorpusVerdict {
            principle,
            checked: corpus.len(),
            failures: outcomes
                .iter()
                .enumerate()
                .filter(|(_, row)| !row[k])
                .map(|(i, _)| i)
                .collect(),
        })
        .collect()
}

/// A semantics that depends on names: the singleton of the
/// lexicographically smallest argument. Useful as a negative control for
/// isomorphy.
pub fn name_sensitive_semantics(framework: &ArgumentationFramework) -> Vec<ArgumentSet> {
    let smallest = (0..framework.len()).min_by_key(|&i| framework.name(i));
    vec![smallest.map_or(ArgumentSet::EMPTY, ArgumentSet::singleton)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical;
    use crate::corpus;
    use crate::jz::jz_extensions;

    fn grounded(f: &ArgumentationFramework) -> Vec<ArgumentSet> {
        vec![classical::grounded(f)]
    }

    #[test]
    fn jz_basic_principles_on_examples() {
        for (name, f) in corpus::named_examples() {
            for p in [
                Principle::Isomorphy,
                Principle::ConflictFreedom,
                Principle::CfMaximality,
                Principle::CfMaximalityFull,
                Principle::InclusionMaximality,
            ] {
                assert!(p.holds(&jz_extensions, &f), "{p} fails on {name}");
            }
        }
    }

    #[test]
    fn negative_control_for_isomorphy() {
        let f = corpus::simple_reinstatement();
        assert!(!Principle::Isomorphy.holds(&name_sensitive_semantics, &f));
        let mapping: HashMap<String, String> = [("a", "x"), ("b", "y"), ("c", "z")]
            .into_iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        assert!(check_isomorphy(&jz_extensions, &f, &mapping).unwrap());
        let mut broken = mapping.clone();
        broken.insert("c".into(), "x".into());
        assert!(check_isomorphy(&jz_extensions, &f, &broken).is_err());
    }

    #[test]
    fn reinstatement() {
        assert!(!check_reinstatement(&jz_extensions, &corpus::three_loop()));
        assert!(check_reinstatement(
            &jz_extensions,
            &corpus::simple_reinstatement()
        ));
        assert!(check_reinstatement(&grounded, &corpus::three_loop()));
    }

    #[test]
    fn directionality_on_spoon() {
        let spoon = corpus::spoon();
        let part = spoon.set_of(["a", "b"]).unwrap();
        let first = spoon.restrict(part);
        let second = spoon.restrict(spoon.arguments().difference(part));
        let bridge = vec![("b".to_string(), "c".to_string())];
        assert!(!check_directionality(&jz_extensions, &first, &second, &bridge).unwrap());
        assert!(check_directionality(&grounded, &first, &second, &bridge).unwrap());
        // the attack-free {a} already fails: {b,d} projects to ∅
        assert_eq!(
            directionality_violation(&jz_extensions, &spoon),
            spoon.set_of(["a"])
        );
        assert_eq!(directionality_violation(&grounded, &spoon), None);
        assert!(check_directionality(
            &jz_extensions,
            &first,
            &ArgumentationFramework::empty(),
            &[]
        )
        .unwrap());
        assert!(check_directionality(&jz_extensions, &first, &first, &[]).is_err());
    }

    #[test]
    fn rejection_principles() {
        let cut = corpus::rej_cut_counterexample();
        assert!(!check_rej_cut(&jz_extensions, &cut));
        let cm = corpus::rej_cm_counterexample();
        assert!(!check_rej_cm(&jz_extensions, &cm));
        let free = ArgumentationFramework::new(["a", "b"], Vec::<(&str, &str)>::new()).unwrap();
        assert!(check_rej_cut(&jz_extensions, &free));
        assert!(check_rej_cm(&jz_extensions, &free));
    }

    #[test]
    fn stage_is_conflict_free() {
        let stage = |f: &ArgumentationFramework| classical::stage(f);
        for f in corpus::random_corpus(3, 40, 6) {
            assert!(check_conflict_freedom(&stage, &f));
        }
    }

    #[test]
    fn corpus_evaluation() {
        let frameworks = vec![corpus::three_loop(), corpus::simple_reinstatement()];
        let verdicts = evaluate_corpus(
            &jz_extensions,
            &[Principle::ConflictFreedom, Principle::Reinstatement],
            &frameworks,
        );
        assert!(verdicts[0].passed());
        assert_eq!(verdicts[1].failures, vec![0]);
        assert_eq!(verdicts[1].checked, 2);
    }
}
