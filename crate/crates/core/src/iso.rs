//! Tournament isomorphism by score-sequence pruning and backtracking.

use crate::altset::AltSet;
use crate::tournament::Tournament;

/// A bijection `map[i]` from alternatives of one tournament to another.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsoMapping {
    map: Vec<usize>,
}

impl IsoMapping {
    pub fn new(map: Vec<usize>) -> Self {
        IsoMapping { map }
    }

    pub fn identity(order: usize) -> Self {
        IsoMapping { map: (0..order).collect() }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn apply_set(&self, set: AltSet) -> AltSet {
        set.map(&self.map)
    }

    /// Checks that this is a bijection `a -> b` preserving dominance both ways.
    pub fn is_valid(&self, a: &Tournament, b: &Tournament) -> bool {
        let n = a.order();
        if b.order() != n || self.map.len() != n {
            return false;
        }
        if self.map.iter().any(|&v| v >= n) || self.map.iter().copied().collect::<AltSet>().len() != n {
            return false;
        }
        (0..n).all(|i| (0..n).all(|j| i == j || a.beats(i, j) == b.beats(self.map[i], self.map[j])))
    }
}

/// Per-vertex invariant: own score, then the sorted scores of the vertices it beats.
fn signature(t: &Tournament, v: usize) -> (usize, Vec<usize>) {
    let mut outs: Vec<usize> = t.dominated_by(v).iter().map(|u| t.score(u)).collect();
    outs.sort_unstable();
    (t.score(v), outs)
}

fn sorted_scores(t: &Tournament) -> Vec<usize> {
    let mut s = t.scores();
    s.sort_unstable();
    s
}

/// Finds an isomorphism from `a` to `b`, or `None` when none exists.
///
/// Score sequences are compared first. Otherwise vertices of `a` are assigned
/// one at a time, rarest score class first, to unused vertices of `b` with the
/// same signature whose edges to every already-assigned vertex agree.
pub fn find_isomorphism(a: &Tournament, b: &Tournament) -> Option<IsoMapping> {
    let n = a.order();
    if b.order() != n || sorted_scores(a) != sorted_scores(b) {
        return None;
    }

    let sig_a: Vec<_> = (0..n).map(|v| signature(a, v)).collect();
    let sig_b: Vec<_> = (0..n).map(|v| signature(b, v)).collect();
    let mut ms_a = sig_a.clone();
    let mut ms_b = sig_b.clone();
    ms_a.sort_unstable();
    ms_b.sort_unstable();
    if ms_a != ms_b {
        return None;
    }

    // candidates[v] = vertices of b sharing v's signature
    let candidates: Vec<AltSet> = (0..n)
        .map(|v| (0..n).filter(|&w| sig_b[w] == sig_a[v]).collect())
        .collect();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (candidates[v].len(), a.score(v), v));

    let mut state = Search {
        a,
        b,
        order: &order,
        candidates: &candidates,
        map: vec![usize::MAX; n],
        used: AltSet::EMPTY,
    };
    if state.extend(0) {
        Some(IsoMapping { map: state.map })
    } else {
        None
    }
}

struct Search<'a> {
    a: &'a Tournament,
    b: &'a Tournament,
    order: &'a [usize],
    candidates: &'a [AltSet],
    map: Vec<usize>,
    used: AltSet,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        let assigned = &self.order[..depth];
        for w in self.candidates[v] - self.used {
            let consistent = assigned
                .iter()
                .all(|&u| self.a.beats(v, u) == self.b.beats(w, self.map[u]));
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used = self.used.insert(w);
            if self.extend(depth + 1) {
                return true;
            }
            self.used = self.used.remove(w);
            self.map[v] = usize::MAX;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Tries every permutation; only for small orders.
    fn brute_force_isomorphic(a: &Tournament, b: &Tournament) -> bool {
        fn go(a: &Tournament, b: &Tournament, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let n = a.order();
            if map.len() == n {
                return IsoMapping::new(map.clone()).is_valid(a, b);
            }
            for w in 0..n {
                if !used[w] {
                    used[w] = true;
                    map.push(w);
                    if go(a, b, map, used) {
                        return true;
                    }
                    map.pop();
                    used[w] = false;
                }
            }
            false
        }
        a.order() == b.order() && go(a, b, &mut Vec::new(), &mut vec![false; a.order()])
    }

    fn relabel(t: &Tournament, perm: &[usize]) -> Tournament {
        // perm[i] is the new label of old vertex i
        let mut inv = vec![0; perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        Tournament::from_fn(t.order(), |i, j| t.beats(inv[i], inv[j]))
    }

    #[test]
    fn cycle_vs_transitive() {
        let cyc = Tournament::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let tr = Tournament::transitive(3);
        assert!(find_isomorphism(&cyc, &tr).is_none());
        assert!(find_isomorphism(&tr, &Tournament::transitive(4)).is_none());
    }

    #[test]
    fn self_isomorphic() {
        for seed in 0..20 {
            let t = Tournament::random(12, seed).unwrap();
            assert!(IsoMapping::identity(12).is_valid(&t, &t));
            let m = find_isomorphism(&t, &t).unwrap();
            assert!(m.is_valid(&t, &t));
        }
    }

    #[test]
    fn validation_rejects_non_bijections() {
        let t = Tournament::transitive(3);
        assert!(!IsoMapping::new(vec![0, 0, 1]).is_valid(&t, &t));
        assert!(!IsoMapping::new(vec![0, 1]).is_valid(&t, &t));
        assert!(!IsoMapping::new(vec![0, 1, 3]).is_valid(&t, &t));
        assert!(!IsoMapping::new(vec![1, 0, 2]).is_valid(&t, &t));
    }

    #[test]
    fn agrees_with_permutation_scan() {
        // Order-5 tournaments split into many isomorphism classes; compare
        // random pairs against the exhaustive scan.
        for seed in 0..300u64 {
            let a = Tournament::random(5, seed).unwrap();
            let b = Tournament::random(5, seed + 1000).unwrap();
            let found = find_isomorphism(&a, &b);
            assert_eq!(found.is_some(), brute_force_isomorphic(&a, &b), "seed {seed}");
            if let Some(m) = found {
                assert!(m.is_valid(&a, &b));
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn finds_relabelings(n in 1usize..=24, seed in any::<u64>(), perm_seed in any::<u64>()) {
            let t = Tournament::random(n, seed).unwrap();
            // Fisher-Yates driven by a second random tournament's bits
            let bits = Tournament::random(64, perm_seed).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                let j = (bits.dominated_by(i).bits() % (i as u64 + 1)) as usize;
                perm.swap(i, j);
            }
            let u = relabel(&t, &perm);
            let m = find_isomorphism(&t, &u);
            prop_assert!(m.is_some());
            prop_assert!(m.unwrap().is_valid(&t, &u));
        }

        #[test]
        fn none_means_no_permutation(seed in any::<u64>(), n in 1usize..=6) {
            let a = Tournament::random(n, seed).unwrap();
            let b = Tournament::random(n, seed.wrapping_add(1)).unwrap();
            prop_assert_eq!(find_isomorphism(&a, &b).is_some(), brute_force_isomorphic(&a, &b));
        }
    }
}
