//! The tournament equilibrium set and TEQ-retentive sets.
//!
//! A nonempty set `X` is TEQ-retentive when, for every `x` in `X` with at
//! least one dominator, the TEQ of the subtournament on `x`'s dominators lies
//! inside `X` (containment is non-strict). TEQ is the union of the
//! inclusion-minimal TEQ-retentive sets.
//!
//! The minimal retentive sets are exactly the terminal strongly connected
//! components of the [`RelationGraph`] with an edge `x -> y` whenever `y`
//! belongs to TEQ of the dominators of `x`. Inner TEQ values are memoized in a
//! [`TeqCache`] keyed by subsets of one base tournament.

mod bruteforce;
mod scc;

use std::collections::HashMap;
use std::time::Instant;

pub use bruteforce::{minimal_retentive_sets_bruteforce, teq_bruteforce, BRUTEFORCE_MAX_ORDER};
pub use scc::{sccs, terminal_sccs, RelationGraph};

use crate::altset::AltSet;
use crate::error::{TeqError, TournamentError};
use crate::tournament::Tournament;

/// Hit/miss counters of a [`TeqCache`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub hits: u64,
    pub misses: u64,
    pub entries: usize,
}

/// Memo table from subsets of a fixed base tournament to their TEQ.
///
/// A subset of the base determines its induced subtournament, so the subset
/// alone is a sound key. Never reuse a cache for a different tournament.
#[derive(Clone, Debug)]
pub struct TeqCache {
    base: Tournament,
    table: HashMap<AltSet, AltSet>,
    hits: u64,
    misses: u64,
    deadline: Option<Instant>,
}

impl TeqCache {
    pub fn new(base: Tournament) -> Self {
        TeqCache {
            base,
            table: HashMap::new(),
            hits: 0,
            misses: 0,
            deadline: None,
        }
    }

    /// Computations still running at `deadline` fail with [`TeqError::TimedOut`].
    pub fn with_deadline(mut self, deadline: Instant) -> Self {
        self.deadline = Some(deadline);
        self
    }

    pub fn base(&self) -> &Tournament {
        &self.base
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            hits: self.hits,
            misses: self.misses,
            entries: self.table.len(),
        }
    }

    /// Cached value for `subset`, if it has been computed.
    pub fn get(&self, subset: AltSet) -> Option<AltSet> {
        if subset.len() == 1 {
            return Some(subset);
        }
        self.table.get(&subset).copied()
    }

    fn check_subset(&self, subset: AltSet) -> Result<(), TeqError> {
        self.base.check_set(subset)?;
        if subset.is_empty() {
            return Err(TournamentError::EmptySet.into());
        }
        Ok(())
    }

    /// TEQ of the subtournament induced by `subset`, in base indices.
    pub fn teq_of_subset(&mut self, subset: AltSet) -> Result<AltSet, TeqError> {
        self.check_subset(subset)?;
        self.compute(subset)
    }

    /// TEQ of the whole base tournament.
    pub fn teq(&mut self) -> Result<AltSet, TeqError> {
        self.compute(self.base.universe())
    }

    fn compute(&mut self, subset: AltSet) -> Result<AltSet, TeqError> {
        if subset.len() == 1 {
            return Ok(subset);
        }
        if let Some(&v) = self.table.get(&subset) {
            self.hits += 1;
            return Ok(v);
        }
        self.misses += 1;
        if self.deadline.is_some_and(|d| Instant::now() >= d) {
            return Err(TeqError::TimedOut);
        }
        let g = self.build_graph(subset)?;
        let result = terminal_sccs(&g).into_iter().fold(AltSet::EMPTY, AltSet::union);
        debug_assert!(!result.is_empty() && result.is_subset(subset));
        self.table.insert(subset, result);
        Ok(result)
    }

    fn build_graph(&mut self, universe: AltSet) -> Result<RelationGraph, TeqError> {
        let mut g = RelationGraph::new(universe);
        for x in universe {
            let dom = self.base.dominators_of(x) & universe;
            if !dom.is_empty() {
                let succ = self.compute(dom)?;
                g.set_successors(x, succ);
            }
        }
        Ok(g)
    }

    /// The TEQ relation graph on `universe`: `x -> TEQ(dom_universe(x))`.
    pub fn relation_graph(&mut self, universe: AltSet) -> Result<RelationGraph, TeqError> {
        self.check_subset(universe)?;
        self.build_graph(universe)
    }

    /// Whether `set` is TEQ-retentive in the base tournament.
    pub fn is_retentive(&mut self, set: AltSet) -> Result<bool, TeqError> {
        self.check_subset(set)?;
        for x in set {
            let dom = self.base.dominators_of(x);
            if !dom.is_empty() && !self.compute(dom)?.is_subset(set) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Inclusion-minimal TEQ-retentive sets of the base tournament, sorted by
    /// smallest member.
    pub fn minimal_retentive_sets(&mut self) -> Result<Vec<AltSet>, TeqError> {
        let g = self.build_graph(self.base.universe())?;
        Ok(terminal_sccs(&g))
    }
}

/// The tournament equilibrium set of `t`.
pub fn teq(t: &Tournament) -> AltSet {
    TeqCache::new(t.clone()).teq().expect("no deadline set")
}

/// All inclusion-minimal TEQ-retentive sets of `t`, sorted by smallest member.
pub fn minimal_retentive_sets(t: &Tournament) -> Vec<AltSet> {
    TeqCache::new(t.clone())
        .minimal_retentive_sets()
        .expect("no deadline set")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::IsoMapping;
    use proptest::prelude::*;

    fn cycle3() -> Tournament {
        Tournament::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    /// Random tournament with alternative `w` made a Condorcet winner.
    fn with_winner(n: usize, seed: u64, w: usize) -> Tournament {
        let r = Tournament::random(n, seed).unwrap();
        Tournament::from_fn(n, |i, j| if i == w { true } else if j == w { false } else { r.beats(i, j) })
    }

    #[test]
    fn single_alternative() {
        let t = Tournament::transitive(1);
        assert_eq!(teq(&t), AltSet::singleton(0));
        assert_eq!(minimal_retentive_sets(&t), vec![AltSet::singleton(0)]);
    }

    #[test]
    fn three_cycle() {
        let t = cycle3();
        assert_eq!(teq(&t), t.universe());
        assert_eq!(minimal_retentive_sets(&t), vec![t.universe()]);
        assert_eq!(teq_bruteforce(&t).unwrap(), t.universe());
    }

    #[test]
    fn condorcet_winner() {
        for (n, seed, w) in [(2, 0, 1), (5, 3, 2), (9, 11, 0), (20, 5, 19)] {
            let t = with_winner(n, seed, w);
            assert_eq!(teq(&t), AltSet::singleton(w));
            assert_eq!(minimal_retentive_sets(&t), vec![AltSet::singleton(w)]);
            let mut cache = TeqCache::new(t.clone());
            assert!(cache.is_retentive(AltSet::singleton(w)).unwrap());
        }
    }

    #[test]
    fn whole_set_is_retentive() {
        for seed in 0..10 {
            let t = Tournament::random(14, seed).unwrap();
            assert!(TeqCache::new(t.clone()).is_retentive(t.universe()).unwrap());
        }
    }

    #[test]
    fn subset_errors() {
        let mut cache = TeqCache::new(cycle3());
        assert_eq!(
            cache.teq_of_subset(AltSet::EMPTY),
            Err(TeqError::Tournament(TournamentError::EmptySet))
        );
        assert!(matches!(cache.teq_of_subset(AltSet::singleton(5)), Err(TeqError::Tournament(_))));
        assert!(cache.is_retentive(AltSet::EMPTY).is_err());
        assert!(cache.relation_graph(AltSet::EMPTY).is_err());
    }

    #[test]
    fn full_subset_matches_teq() {
        let t = Tournament::random(15, 99).unwrap();
        let mut cache = TeqCache::new(t.clone());
        assert_eq!(cache.teq_of_subset(t.universe()).unwrap(), teq(&t));
    }

    #[test]
    fn repeated_call_hits_cache() {
        let t = Tournament::random(16, 4).unwrap();
        let mut cache = TeqCache::new(t.clone());
        let s = t.universe().remove(3);
        let first = cache.teq_of_subset(s).unwrap();
        let before = cache.stats();
        let second = cache.teq_of_subset(s).unwrap();
        let after = cache.stats();
        assert_eq!(first, second);
        assert_eq!(after.hits, before.hits + 1);
        assert_eq!(after.misses, before.misses);
        assert_eq!(cache.get(s), Some(first));
    }

    #[test]
    fn expired_deadline_times_out() {
        let t = Tournament::random(20, 1).unwrap();
        let mut cache = TeqCache::new(t).with_deadline(Instant::now());
        assert_eq!(cache.teq(), Err(TeqError::TimedOut));
    }

    #[test]
    fn relation_graph_shape() {
        let t = Tournament::random(13, 8).unwrap();
        let mut cache = TeqCache::new(t.clone());
        let g = cache.relation_graph(t.universe()).unwrap();
        for x in t.universe() {
            let dom = t.dominators_of(x);
            let succ = g.successors(x);
            assert!(!succ.contains(x));
            if dom.is_empty() {
                assert!(succ.is_empty());
            } else {
                assert_eq!(succ, cache.teq_of_subset(dom).unwrap());
            }
        }
    }

    #[test]
    fn minimal_sets_are_minimal_for_small_orders() {
        for n in 1..=6usize {
            let pairs = n * (n - 1) / 2;
            for code in 0u64..1 << pairs {
                let t = tournament_from_code(n, code);
                check_minimal_sets(&t);
            }
        }
    }

    pub(crate) fn tournament_from_code(n: usize, code: u64) -> Tournament {
        let mut p = 0;
        Tournament::from_fn(n, |_, _| {
            let b = code >> p & 1 == 1;
            p += 1;
            b
        })
    }

    fn check_minimal_sets(t: &Tournament) {
        let mut cache = TeqCache::new(t.clone());
        let sets = cache.minimal_retentive_sets().unwrap();
        assert!(!sets.is_empty());
        let union = sets.iter().fold(AltSet::EMPTY, |a, &b| a | b);
        assert_eq!(union, cache.teq().unwrap());
        for (k, &s) in sets.iter().enumerate() {
            assert!(!s.is_empty());
            assert!(cache.is_retentive(s).unwrap(), "{t:?} {s:?}");
            for x in s {
                let smaller = s.remove(x);
                assert!(smaller.is_empty() || !cache.is_retentive(smaller).unwrap());
            }
            for &other in &sets[k + 1..] {
                assert!(s.is_disjoint(other));
                assert!(s.first() < other.first());
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn nonempty_and_union_of_minimal(n in 1usize..=20, seed in any::<u64>()) {
            let t = Tournament::random(n, seed).unwrap();
            let v = teq(&t);
            prop_assert!(!v.is_empty() && v.is_subset(t.universe()));
            let union = minimal_retentive_sets(&t).into_iter().fold(AltSet::EMPTY, AltSet::union);
            prop_assert_eq!(union, v);
        }

        #[test]
        fn sampled_minimality(n in 7usize..=16, seed in any::<u64>()) {
            check_minimal_sets(&Tournament::random(n, seed).unwrap());
        }

        #[test]
        fn isomorphism_invariance(n in 1usize..=18, seed in any::<u64>(), keys in prop::collection::vec(any::<u32>(), 18)) {
            let t = Tournament::random(n, seed).unwrap();
            let mut by_key: Vec<usize> = (0..n).collect();
            by_key.sort_by_key(|&i| (keys[i], i));
            // perm[i] is the new label of old vertex i
            let mut perm = vec![0; n];
            for (new, &old) in by_key.iter().enumerate() {
                perm[old] = new;
            }
            let u = Tournament::from_fn(n, |i, j| t.beats(by_key[i], by_key[j]));
            let phi = IsoMapping::new(perm);
            prop_assert!(phi.is_valid(&t, &u));
            prop_assert_eq!(phi.apply_set(teq(&t)), teq(&u));
        }

        #[test]
        fn warm_cache_equals_cold(n in 2usize..=18, seed in any::<u64>(), drop in 0usize..18) {
            let t = Tournament::random(n, seed).unwrap();
            let sub = t.universe().remove(drop % n);
            let mut warm = TeqCache::new(t.clone());
            warm.teq().unwrap();
            let mut cold = TeqCache::new(t.clone());
            prop_assert_eq!(warm.teq_of_subset(sub).unwrap(), cold.teq_of_subset(sub).unwrap());
            let r = t.restrict(sub).unwrap();
            prop_assert_eq!(r.lift(teq(&r.tournament)), cold.teq_of_subset(sub).unwrap());
        }
    }
}
