//! Direct computation of JZ extensions through extension weights.
//!
//! The weight of a conflict-free `E ⊆ A⁺` is the number of non-self-attacking
//! arguments left out of `E`, plus the number of one-sided attacks `a ▷ b`
//! with `a ∈ A⁺ \ E` and `b ∈ A⁺`. Every other set weighs `∞`. JZ
//! extensions are the sets of minimal weight.

use crate::framework::{sort_extensions, ArgumentSet, ArgumentationFramework};
use crate::ranking::Rank;

/// Cost each argument of `A⁺` contributes when it is left out.
fn exclusion_costs(framework: &ArgumentationFramework, plus: ArgumentSet) -> Vec<u64> {
    (0..framework.len())
        .map(|a| {
            if !plus.contains(a) {
                return 0;
            }
            let one_sided = framework
                .targets_of(a)
                .intersection(plus)
                .iter()
                .filter(|&b| framework.attacks_one_sided(a, b))
                .count();
            1 + one_sided as u64
        })
        .collect()
}

fn finite_weight(costs: &[u64], plus: ArgumentSet, set: ArgumentSet) -> u64 {
    plus.difference(set).iter().map(|a| costs[a]).sum()
}

pub fn extension_weight(framework: &ArgumentationFramework, set: ArgumentSet) -> Rank {
    let plus = framework.non_self_attacking();
    if !set.is_subset(plus) || !framework.is_conflict_free(set) {
        return Rank::TOP;
    }
    Rank::integer(finite_weight(&exclusion_costs(framework, plus), plus, set))
}

/// All JZ extensions, in canonical order.
///
/// Branch and bound over `A⁺` in index order: the weight of the arguments
/// excluded so far is a lower bound for every completion, so a branch is
/// dropped once it exceeds the best weight seen.
pub fn jz_extensions(framework: &ArgumentationFramework) -> Vec<ArgumentSet> {
    let plus = framework.non_self_attacking();
    let costs = exclusion_costs(framework, plus);
    let order: Vec<usize> = plus.iter().collect();
    let mut search = Search {
        framework,
        costs: &costs,
        order: &order,
        best: u64::MAX,
        minima: Vec::new(),
    };
    search.descend(0, ArgumentSet::EMPTY, 0);
    let mut out = search.minima;
    sort_extensions(&mut out);
    out
}

/// The first JZ extension in canonical order.
pub fn one_jz_extension(framework: &ArgumentationFramework) -> ArgumentSet {
    jz_extensions(framework)
        .into_iter()
        .next()
        .expect("the empty set always has finite weight")
}

struct Search<'a> {
    framework: &'a ArgumentationFramework,
    costs: &'a [u64],
    order: &'a [usize],
    best: u64,
    minima: Vec<ArgumentSet>,
}

impl Search<'_> {
    fn descend(&mut self, depth: usize, set: ArgumentSet, excluded: u64) {
        if excluded > self.best {
            return;
        }
        if depth == self.order.len() {
            if excluded < self.best {
                self.best = excluded;
                self.minima.clear();
            }
            self.minima.push(set);
            return;
        }
        let a = self.order[depth];
        if self.framework.compatible(set, a) {
            self.descend(depth + 1, set.with(a), excluded);
        }
        self.descend(depth + 1, set, excluded + self.costs[a]);
    }
}

/// Weights of all conflict-free subsets of `A⁺` with the minimal ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightReport {
    /// `(E, weight)` in canonical order of `E`.
    pub entries: Vec<(ArgumentSet, u64)>,
    pub minimum: u64,
    pub minima: Vec<ArgumentSet>,
}

impl WeightReport {
    pub fn weight(&self, set: ArgumentSet) -> Option<u64> {
        self.entries
            .iter()
            .find(|(s, _)| *s == set)
            .map(|&(_, w)| w)
    }
}

pub fn weight_table(framework: &ArgumentationFramework) -> WeightReport {
    let plus = framework.non_self_attacking();
    let costs = exclusion_costs(framework, plus);
    let mut entries: Vec<(ArgumentSet, u64)> = framework
        .conflict_free_sets(plus)
        .map(|s| (s, finite_weight(&costs, plus, s)))
        .collect();
    entries.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    let minimum = entries
        .iter()
        .map(|&(_, w)| w)
        .min()
        .expect("the empty set is always conflict-free");
    let minima = entries
        .iter()
        .filter(|&&(_, w)| w == minimum)
        .map(|&(s, _)| s)
        .collect();
    WeightReport {
        entries,
        minimum,
        minima,
    }
}
