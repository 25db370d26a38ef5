//! The tournament data model.

use std::fmt;
use std::str::FromStr;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::altset::{AltSet, MAX_ORDER};
use crate::error::{ParseError, TournamentError};

/// A complete, asymmetric dominance relation over alternatives `0..order`.
///
/// Each alternative carries two bit rows: the alternatives it dominates and
/// the alternatives that dominate it. The constructors guarantee the two
/// views agree and that every pair is oriented exactly once.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    order: usize,
    out: Vec<AltSet>,
    inn: Vec<AltSet>,
}

fn check_order(order: usize) -> Result<(), TournamentError> {
    if order == 0 || order > MAX_ORDER {
        Err(TournamentError::InvalidOrder(order))
    } else {
        Ok(())
    }
}

impl Tournament {
    /// Builds a tournament from a full `order x order` table where
    /// `table[i][j]` means "i dominates j".
    pub fn from_matrix<R: AsRef<[bool]>>(table: &[R]) -> Result<Self, TournamentError> {
        let order = table.len();
        check_order(order)?;
        if table.iter().any(|r| r.as_ref().len() != order) {
            return Err(TournamentError::NotSquare { order });
        }
        let at = |i: usize, j: usize| table[i].as_ref()[j];
        for i in 0..order {
            if at(i, i) {
                return Err(TournamentError::Reflexive(i));
            }
            for j in i + 1..order {
                match (at(i, j), at(j, i)) {
                    (true, true) => return Err(TournamentError::AsymmetryViolated(i, j)),
                    (false, false) => return Err(TournamentError::CompletenessViolated(i, j)),
                    _ => {}
                }
            }
        }
        Ok(Self::from_fn(order, at))
    }

    /// Builds a tournament from an orientation rule queried once per pair
    /// `i < j`: `i_beats_j(i, j)` decides whether `i` dominates `j`.
    ///
    /// Panics if `order` is outside `1..=64`.
    pub fn from_fn(order: usize, mut i_beats_j: impl FnMut(usize, usize) -> bool) -> Self {
        assert!((1..=MAX_ORDER).contains(&order), "order {order} out of range");
        let mut out = vec![AltSet::EMPTY; order];
        let mut inn = vec![AltSet::EMPTY; order];
        for i in 0..order {
            for j in i + 1..order {
                let (w, l) = if i_beats_j(i, j) { (i, j) } else { (j, i) };
                out[w] = out[w].insert(l);
                inn[l] = inn[l].insert(w);
            }
        }
        Tournament { order, out, inn }
    }

    /// Builds a tournament from the list of ordered pairs `(winner, loser)`.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, TournamentError> {
        check_order(order)?;
        let mut table = vec![vec![false; order]; order];
        for &(w, l) in edges {
            for index in [w, l] {
                if index >= order {
                    return Err(TournamentError::IndexOutOfRange { index, order });
                }
            }
            if w == l {
                return Err(TournamentError::Reflexive(w));
            }
            if table[l][w] {
                return Err(TournamentError::AsymmetryViolated(w.min(l), w.max(l)));
            }
            table[w][l] = true;
        }
        Self::from_matrix(&table)
    }

    /// The transitive tournament where `i` dominates `j` whenever `i < j`.
    pub fn transitive(order: usize) -> Self {
        Self::from_fn(order, |_, _| true)
    }

    /// Uniformly random tournament, reproducible from `(order, seed)`.
    ///
    /// Pairs are visited in lexicographic `(i, j)`, `i < j` order; pair number
    /// `p` is oriented by the low bit of word `p` of the ChaCha8 keystream
    /// seeded from `seed`. The result depends only on the inputs.
    pub fn random(order: usize, seed: u64) -> Result<Self, TournamentError> {
        check_order(order)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Ok(Self::from_fn(order, |_, _| rng.next_u32() & 1 == 1))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn universe(&self) -> AltSet {
        AltSet::universe(self.order)
    }

    /// Whether `i` dominates `j`. Panics on out-of-range indices.
    #[inline]
    pub fn beats(&self, i: usize, j: usize) -> bool {
        self.out[i].contains(j)
    }

    /// Alternatives dominated by `x`.
    #[inline]
    pub fn dominated_by(&self, x: usize) -> AltSet {
        self.out[x]
    }

    /// Alternatives dominating `x` in the whole tournament.
    #[inline]
    pub fn dominators_of(&self, x: usize) -> AltSet {
        self.inn[x]
    }

    /// `{ y in within | y dominates x }`. `x` need not belong to `within`.
    pub fn dominators(&self, within: AltSet, x: usize) -> Result<AltSet, TournamentError> {
        self.check_index(x)?;
        self.check_set(within)?;
        Ok(self.inn[x] & within)
    }

    /// Out-degree of `x`.
    #[inline]
    pub fn score(&self, x: usize) -> usize {
        self.out[x].len()
    }

    pub fn scores(&self) -> Vec<usize> {
        (0..self.order).map(|x| self.score(x)).collect()
    }

    /// An alternative dominating every other one, if it exists.
    pub fn condorcet_winner(&self) -> Option<usize> {
        (0..self.order).find(|&x| self.inn[x].is_empty())
    }

    /// The induced subtournament on `subset`.
    pub fn restrict(&self, subset: AltSet) -> Result<Restriction, TournamentError> {
        self.check_set(subset)?;
        if subset.is_empty() {
            return Err(TournamentError::EmptySet);
        }
        let to_parent: Vec<usize> = subset.iter().collect();
        let tournament = Self::from_fn(to_parent.len(), |i, j| self.beats(to_parent[i], to_parent[j]));
        Ok(Restriction { tournament, to_parent })
    }

    /// Copy with the orientation of the pair `{i, j}` reversed.
    pub fn with_flipped(&self, i: usize, j: usize) -> Result<Self, TournamentError> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i == j {
            return Err(TournamentError::Reflexive(i));
        }
        let mut t = self.clone();
        let (w, l) = if t.beats(i, j) { (i, j) } else { (j, i) };
        t.out[w] = t.out[w].remove(l);
        t.inn[l] = t.inn[l].remove(w);
        t.out[l] = t.out[l].insert(w);
        t.inn[w] = t.inn[w].insert(l);
        Ok(t)
    }

    pub fn check_index(&self, index: usize) -> Result<(), TournamentError> {
        if index < self.order {
            Ok(())
        } else {
            Err(TournamentError::IndexOutOfRange { index, order: self.order })
        }
    }

    pub fn check_set(&self, set: AltSet) -> Result<(), TournamentError> {
        if set.is_subset(self.universe()) {
            Ok(())
        } else {
            Err(TournamentError::SetOutOfRange { order: self.order })
        }
    }

    /// Text form: order on the first line, then one `0`/`1` row per alternative.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Inverse of [`Tournament::to_text`].
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l));
        let header = lines.next().unwrap_or("");
        let order: usize = header.trim().parse().map_err(|_| ParseError::Malformed {
            line: 1,
            message: format!("expected the number of alternatives, found {header:?}"),
        })?;
        check_order(order).map_err(|source| ParseError::Invalid { line: 1, source })?;

        let mut rows: Vec<Vec<bool>> = Vec::with_capacity(order);
        for r in 0..order {
            let line = r + 2;
            let Some(text) = lines.next().filter(|l| !l.is_empty()) else {
                return Err(ParseError::Malformed {
                    line,
                    message: format!("expected {order} matrix rows, found {r}"),
                });
            };
            let row = text
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    other => Err(ParseError::Malformed {
                        line,
                        message: format!("unexpected character {other:?} (only '0' and '1' allowed)"),
                    }),
                })
                .collect::<Result<Vec<bool>, _>>()?;
            if row.len() != order {
                return Err(ParseError::Malformed {
                    line,
                    message: format!("expected {order} entries, found {}", row.len()),
                });
            }
            if row[r] {
                return Err(ParseError::Invalid { line, source: TournamentError::Reflexive(r) });
            }
            for (i, prev) in rows.iter().enumerate() {
                let source = match (prev[r], row[i]) {
                    (true, true) => TournamentError::AsymmetryViolated(i, r),
                    (false, false) => TournamentError::CompletenessViolated(i, r),
                    _ => continue,
                };
                return Err(ParseError::Invalid { line, source });
            }
            rows.push(row);
        }
        if let Some((k, _)) = lines.enumerate().find(|(_, l)| !l.trim().is_empty()) {
            return Err(ParseError::Malformed {
                line: order + 2 + k,
                message: "unexpected content after the matrix".into(),
            });
        }
        Tournament::from_matrix(&rows).map_err(|source| ParseError::Invalid { line: 1, source })
    }
}

impl fmt::Display for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.order)?;
        for i in 0..self.order {
            for j in 0..self.order {
                f.write_str(if self.beats(i, j) { "1" } else { "0" })?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament(\n{self})")
    }
}

impl FromStr for Tournament {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        Tournament::parse(s)
    }
}

/// An induced subtournament together with the map back to its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub tournament: Tournament,
    /// `to_parent[i]` is the parent index of local alternative `i`.
    pub to_parent: Vec<usize>,
}

impl Restriction {
    /// Maps a set of local indices to parent indices.
    pub fn lift(&self, local: AltSet) -> AltSet {
        local.map(&self.to_parent)
    }
}
