//! Direct transcription of the TEQ definition, used as an oracle.
//!
//! Every nonempty subset is tested for retentiveness and the inclusion-minimal
//! ones are kept. Inner TEQ values come from the same procedure, memoized per
//! subset. There is no graph or SCC shortcut anywhere on this path.

use std::collections::HashMap;

use crate::altset::AltSet;
use crate::error::TeqError;
use crate::tournament::Tournament;

/// Largest order accepted by the brute-force routines.
pub const BRUTEFORCE_MAX_ORDER: usize = 12;

struct Oracle<'t> {
    t: &'t Tournament,
    memo: HashMap<AltSet, AltSet>,
}

impl Oracle<'_> {
    /// Minimal retentive subsets of the subtournament on `universe`.
    fn minimal(&mut self, universe: AltSet) -> Vec<AltSet> {
        // inner[x] = TEQ(dom_universe(x)), or None when x is undominated
        let mut inner = [None; 64];
        for x in universe {
            let dom = self.t.dominators_of(x) & universe;
            if !dom.is_empty() {
                inner[x] = Some(self.teq(dom));
            }
        }
        let retentive = |y: AltSet| y.iter().all(|x| inner[x].is_none_or(|s: AltSet| s.is_subset(y)));

        let mut candidates: Vec<AltSet> = universe.nonempty_subsets().collect();
        candidates.sort_by_key(|s| (s.len(), s.bits()));
        let mut minimal: Vec<AltSet> = Vec::new();
        for y in candidates {
            // anything containing a smaller retentive set is not minimal
            if minimal.iter().any(|m| m.is_subset(y)) {
                continue;
            }
            if retentive(y) {
                minimal.push(y);
            }
        }
        minimal.sort_by_key(|s| s.first());
        minimal
    }

    fn teq(&mut self, universe: AltSet) -> AltSet {
        if universe.len() == 1 {
            return universe;
        }
        if let Some(&v) = self.memo.get(&universe) {
            return v;
        }
        let v = self.minimal(universe).into_iter().fold(AltSet::EMPTY, AltSet::union);
        self.memo.insert(universe, v);
        v
    }
}

fn guard(t: &Tournament) -> Result<(), TeqError> {
    if t.order() > BRUTEFORCE_MAX_ORDER {
        Err(TeqError::TooLarge { order: t.order(), limit: BRUTEFORCE_MAX_ORDER })
    } else {
        Ok(())
    }
}

/// TEQ by exhaustive subset enumeration. Orders above 12 are rejected.
pub fn teq_bruteforce(t: &Tournament) -> Result<AltSet, TeqError> {
    guard(t)?;
    Ok(Oracle { t, memo: HashMap::new() }.teq(t.universe()))
}

/// Minimal TEQ-retentive sets by exhaustive subset enumeration.
pub fn minimal_retentive_sets_bruteforce(t: &Tournament) -> Result<Vec<AltSet>, TeqError> {
    guard(t)?;
    Ok(Oracle { t, memo: HashMap::new() }.minimal(t.universe()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::teq::tests::tournament_from_code;

    #[test]
    fn three_cycle_by_hand() {
        // Of the 7 nonempty subsets only {0,1,2} is closed:
        // 0 is beaten by 2, 1 by 0, 2 by 1, so every singleton and pair leaks.
        let t = Tournament::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(teq_bruteforce(&t).unwrap(), t.universe());
        assert_eq!(minimal_retentive_sets_bruteforce(&t).unwrap(), vec![t.universe()]);
    }

    #[test]
    fn singleton() {
        let t = Tournament::transitive(1);
        assert_eq!(teq_bruteforce(&t).unwrap(), AltSet::singleton(0));
    }

    #[test]
    fn transitive_has_winner() {
        let t = Tournament::transitive(8);
        assert_eq!(teq_bruteforce(&t).unwrap(), AltSet::singleton(0));
    }

    #[test]
    fn order_guard() {
        let t = Tournament::random(13, 0).unwrap();
        assert_eq!(teq_bruteforce(&t), Err(TeqError::TooLarge { order: 13, limit: 12 }));
        assert!(teq_bruteforce(&Tournament::random(12, 0).unwrap()).is_ok());
    }

    #[test]
    fn agrees_with_scc_route_up_to_order_5() {
        for n in 1..=5usize {
            for code in 0u64..1 << (n * (n - 1) / 2) {
                let t = tournament_from_code(n, code);
                assert_eq!(teq_bruteforce(&t).unwrap(), crate::teq::teq(&t), "{t:?}");
                assert_eq!(
                    minimal_retentive_sets_bruteforce(&t).unwrap(),
                    crate::teq::minimal_retentive_sets(&t)
                );
            }
        }
    }
}
