//! Ranking constructions: measures obtained from the uniform measure by
//! shifting the violation regions of a base's conditionals.

use std::collections::BTreeMap;

use super::measure::{ConditionalKind, DefaultBase, RankingMeasure};
use super::rank::Rank;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("{shifts} shift values for a base of {conditionals} conditionals")]
    LengthMismatch { shifts: usize, conditionals: usize },
}

/// `R0 + Σ shifts[i] [φ_i ∧ ¬ψ_i]`. The result may be unnormalized.
pub fn construct(base: &DefaultBase, shifts: &[Rank]) -> Result<RankingMeasure, ConstructionError> {
    if shifts.len() != base.len() {
        return Err(ConstructionError::LengthMismatch {
            shifts: shifts.len(),
            conditionals: base.len(),
        });
    }
    Ok(base.iter().zip(shifts).fold(
        RankingMeasure::uniform(base.space_len()),
        |r, (c, &amount)| r.shift(&c.violation(), amount),
    ))
}

/// Whether `construct(base, shifts)` is a normalized model of `base` in which
/// every positively shifted conditional holds with equality.
///
/// For strict conditionals (read as `φ ∧ ¬ψ ⇝ ⊥`) equality means the
/// violation region is impossible.
pub fn is_justifiably_constructible(base: &DefaultBase, shifts: &[Rank]) -> bool {
    let Ok(measure) = construct(base, shifts) else {
        return false;
    };
    if !measure.satisfies_base(base) {
        return false;
    }
    base.iter().zip(shifts).all(|(c, &amount)| {
        if amount == Rank::ZERO {
            return true;
        }
        let violation = measure.rank_of(&c.violation());
        match c.kind {
            ConditionalKind::Strict => violation.is_top(),
            ConditionalKind::Default => measure.rank_of(&c.verification()) + Rank::ONE == violation,
        }
    })
}

/// One justifiably constructible model found by [`jj_search`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JjModel {
    /// The first shift vector (in search order) producing `measure`.
    pub shifts: Vec<Rank>,
    pub measure: RankingMeasure,
}

/// Exhaustive search for justifiably constructible models of `base` with
/// shifts in `{0, .., bound, Top}`.
///
/// Results are deduplicated by measure. Conditionals whose violation region
/// must be impossible in any model (see
/// [`Conditional::forces_impossible_violation`](super::Conditional::forces_impossible_violation))
/// only try `0` and `Top`: a finite positive shift on such a region is
/// either unjustified or lands on worlds already at `Top`, so it never
/// produces a new measure.
///
/// Meant as an oracle for bases of a handful of conditionals.
pub fn jj_search(base: &DefaultBase, bound: u64) -> Vec<JjModel> {
    let space = base.space_len();
    let finite: Vec<u64> = (0..=bound).collect();
    let candidates: Vec<Vec<u64>> = base
        .iter()
        .map(|c| {
            if c.forces_impossible_violation() {
                vec![0, INF]
            } else {
                finite.iter().copied().chain([INF]).collect()
            }
        })
        .collect();
    let checks: Vec<Check> = base
        .iter()
        .map(|c| Check {
            strict: c.kind == ConditionalKind::Strict,
            verification: c.verification().worlds().collect(),
            violation: c.violation().worlds().collect(),
        })
        .collect();

    let mut search = Search {
        checks: &checks,
        candidates: &candidates,
        levels: vec![vec![0u64; space]; base.len() + 1],
        chosen: vec![0u64; base.len()],
        found: BTreeMap::new(),
    };
    search.descend(0);

    search
        .found
        .into_values()
        .map(|shifts| {
            let shifts: Vec<Rank> = shifts.into_iter().map(to_rank).collect();
            let measure = construct(base, &shifts).expect("lengths agree");
            debug_assert!(is_justifiably_constructible(base, &shifts));
            JjModel { shifts, measure }
        })
        .collect()
}

const INF: u64 = u64::MAX;

fn add(a: u64, b: u64) -> u64 {
    if a == INF || b == INF {
        INF
    } else {
        a + b
    }
}

fn to_rank(v: u64) -> Rank {
    if v == INF {
        Rank::TOP
    } else {
        Rank::integer(v)
    }
}

struct Check {
    strict: bool,
    verification: Vec<usize>,
    violation: Vec<usize>,
}

struct Search<'a> {
    checks: &'a [Check],
    candidates: &'a [Vec<u64>],
    levels: Vec<Vec<u64>>,
    chosen: Vec<u64>,
    found: BTreeMap<Vec<u64>, Vec<u64>>,
}

impl Search<'_> {
    fn descend(&mut self, depth: usize) {
        // Ranks only grow, so once no world is at zero the branch is dead.
        if !self.levels[depth].contains(&0) {
            return;
        }
        if depth == self.checks.len() {
            if self.accepts(&self.levels[depth]) {
                let ranks = self.levels[depth].clone();
                self.found
                    .entry(ranks)
                    .or_insert_with(|| self.chosen.clone());
            }
            return;
        }
        for ci in 0..self.candidates[depth].len() {
            let value = self.candidates[depth][ci];
            self.chosen[depth] = value;
            let (lower, upper) = self.levels.split_at_mut(depth + 1);
            let next = &mut upper[0];
            next.copy_from_slice(&lower[depth]);
            if value != 0 {
                for &w in &self.checks[depth].violation {
                    next[w] = add(next[w], value);
                }
            }
            self.descend(depth + 1);
        }
    }

    fn accepts(&self, ranks: &[u64]) -> bool {
        let min_of = |ws: &[usize]| ws.iter().map(|&w| ranks[w]).min().unwrap_or(INF);
        self.checks.iter().zip(&self.chosen).all(|(check, &shift)| {
            let violation = min_of(&check.violation);
            if check.strict {
                return violation == INF;
            }
            let verification = add(min_of(&check.verification), 1);
            if shift == 0 {
                verification <= violation
            } else {
                verification == violation
            }
        })
    }
}
