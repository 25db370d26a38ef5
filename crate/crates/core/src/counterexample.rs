//! The 24-alternative tournament with two disjoint TEQ-retentive sets, and a
//! checker for each property claimed about it.
//!
//! Index convention: `0..12` are `x1..x12`, `12..24` are `y1..y12`.

use std::fmt;

use crate::altset::AltSet;
use crate::error::TeqError;
use crate::iso::{find_isomorphism, IsoMapping};
use crate::teq::TeqCache;
use crate::tournament::Tournament;

/// Size of each half.
pub const HALF: usize = 12;
pub const ORDER: usize = 2 * HALF;

/// `DOMINATORS_X[i]` lists (1-based) the `x_j` that dominate `x_{i+1}` within X.
pub const DOMINATORS_X: [&[usize]; HALF] = [
    &[4, 5, 6, 8, 9, 12],
    &[1, 6, 7, 10, 12],
    &[1, 2, 6, 7, 9, 10],
    &[2, 3, 7, 8, 11],
    &[2, 3, 4, 8, 10, 11],
    &[4, 5, 9, 11, 12],
    &[1, 5, 6, 11, 12],
    &[2, 3, 6, 7, 12],
    &[2, 4, 5, 7, 8],
    &[1, 4, 6, 7, 8, 9],
    &[1, 2, 3, 8, 9, 10],
    &[3, 4, 5, 9, 10, 11],
];

/// `TEQ_OF_DOMINATORS_X[i]` lists (1-based) TEQ of `dom_A(x_{i+1})`, as tabulated for the reference instance.
pub const TEQ_OF_DOMINATORS_X: [[usize; 3]; HALF] = [
    [4, 8, 12],
    [6, 10, 12],
    [6, 7, 9],
    [2, 7, 11],
    [2, 8, 10],
    [4, 9, 11],
    [1, 5, 11],
    [3, 6, 12],
    [2, 5, 7],
    [4, 6, 7],
    [1, 2, 8],
    [3, 4, 9],
];

fn one_based(xs: &[usize], offset: usize) -> AltSet {
    xs.iter().map(|&x| x - 1 + offset).collect()
}

/// Expected `dom_X(x_i)` for 0-based `i`, in tournament indices.
pub fn expected_dominators_x(i: usize) -> AltSet {
    one_based(DOMINATORS_X[i], 0)
}

/// Expected `TEQ(dom_A(x_i))` for 0-based `i`, in tournament indices.
pub fn expected_teq_x(i: usize) -> AltSet {
    one_based(&TEQ_OF_DOMINATORS_X[i], 0)
}

/// `x1..x12`, `y1..y12`.
pub fn label(i: usize) -> String {
    if i < HALF {
        format!("x{}", i + 1)
    } else {
        format!("y{}", i - HALF + 1)
    }
}

/// `{x4, x8, x12}`.
pub fn label_set(s: AltSet) -> String {
    let parts: Vec<String> = s.iter().map(label).collect();
    format!("{{{}}}", parts.join(", "))
}

/// The order-12 tournament `T|X` read off the dominator table.
///
/// Panics if the table does not describe a tournament.
pub fn half_tournament() -> Tournament {
    let mut table = [[false; HALF]; HALF];
    for (i, doms) in DOMINATORS_X.iter().enumerate() {
        for &j in *doms {
            table[j - 1][i] = true;
        }
    }
    Tournament::from_matrix(&table).expect("embedded dominator table is not a tournament")
}

/// The counterexample together with its named parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleInstance {
    pub tournament: Tournament,
    pub x_set: AltSet,
    pub y_set: AltSet,
    pub x1: AltSet,
    pub x2: AltSet,
    pub y1: AltSet,
    pub y2: AltSet,
}

impl CounterexampleInstance {
    /// Builds the instance: two copies of the table on X and Y, with
    /// `X1 > Y2`, `X2 > Y1`, `Y1 > X1` and `Y2 > X2` across.
    pub fn build() -> Self {
        let half = half_tournament();
        let x1 = AltSet::range(0, 6);
        let x2 = AltSet::range(6, 12);
        let y1 = AltSet::range(12, 18);
        let y2 = AltSet::range(18, 24);

        let mut table = [[false; ORDER]; ORDER];
        for i in 0..HALF {
            for j in 0..HALF {
                table[i][j] = half.beats(i, j);
                table[i + HALF][j + HALF] = half.beats(i, j);
            }
        }
        for (winners, losers) in [(x1, y2), (x2, y1), (y1, x1), (y2, x2)] {
            for w in winners {
                for l in losers {
                    table[w][l] = true;
                }
            }
        }
        let tournament =
            Tournament::from_matrix(&table).expect("cross-group structure is not a tournament");
        CounterexampleInstance {
            tournament,
            x_set: x1 | x2,
            y_set: y1 | y2,
            x1,
            x2,
            y1,
            y2,
        }
    }

    /// Same instance with the pair `{a, b}` reversed. Test hook for checking
    /// that verification notices damage.
    #[doc(hidden)]
    pub fn with_flipped_edge(&self, a: usize, b: usize) -> Self {
        CounterexampleInstance {
            tournament: self.tournament.with_flipped(a, b).expect("valid pair"),
            ..self.clone()
        }
    }
}

/// Builds the 24-alternative counterexample.
pub fn build_counterexample() -> CounterexampleInstance {
    CounterexampleInstance::build()
}

/// Outcome of checking one claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimEntry {
    pub id: String,
    pub description: String,
    pub passed: bool,
    pub expected: Option<AltSet>,
    pub computed: Option<AltSet>,
    pub detail: String,
}

impl ClaimEntry {
    fn new(id: impl Into<String>, description: impl Into<String>, passed: bool) -> Self {
        ClaimEntry {
            id: id.into(),
            description: description.into(),
            passed,
            expected: None,
            computed: None,
            detail: String::new(),
        }
    }

    fn sets(mut self, expected: AltSet, computed: AltSet) -> Self {
        self.expected = Some(expected);
        self.computed = Some(computed);
        self
    }

    fn detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub claims: Vec<ClaimEntry>,
    /// Minimal TEQ-retentive sets of the whole tournament, as computed.
    pub minimal_sets: Vec<AltSet>,
    /// Witness for the `T|X -> T|Y` isomorphism, in local 0-based indices.
    pub isomorphism: Option<IsoMapping>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    /// True iff every claim passed.
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimEntry> {
        self.claims.iter().filter(|c| !c.passed)
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimEntry> {
        self.claims.iter().find(|c| c.id == id)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.claims {
            write!(f, "[{}] {:<18} {}", if c.passed { "PASS" } else { "FAIL" }, c.id, c.description)?;
            match (c.expected, c.computed) {
                (Some(e), Some(got)) if e == got => write!(f, ": {}", label_set(got))?,
                (Some(e), Some(got)) => write!(f, ": expected {}, computed {}", label_set(e), label_set(got))?,
                _ => {}
            }
            if !c.detail.is_empty() {
                write!(f, " ({})", c.detail)?;
            }
            writeln!(f)?;
        }
        writeln!(f, "minimal TEQ-retentive sets:")?;
        for s in &self.minimal_sets {
            writeln!(f, "  {}", label_set(*s))?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        write!(f, "verdict: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Recomputes every claim about `inst` from its tournament.
pub fn verify_claims(inst: &CounterexampleInstance) -> VerificationReport {
    verify(inst).expect("no deadline set")
}

fn verify(inst: &CounterexampleInstance) -> Result<VerificationReport, TeqError> {
    let t = &inst.tournament;
    let (x, y) = (inst.x_set, inst.y_set);
    let mut claims = Vec::new();
    let mut cache = TeqCache::new(t.clone());

    // Dominator table inside each half.
    let mut mismatched = Vec::new();
    for i in 0..HALF {
        let ex = expected_dominators_x(i);
        if t.dominators(x, i)? != ex {
            mismatched.push(label(i));
        }
        if t.dominators(y, i + HALF)? != AltSet::from_bits(ex.bits() << HALF) {
            mismatched.push(label(i + HALF));
        }
    }
    claims.push(
        ClaimEntry::new("dominator-table", "dom_X(x_i) and dom_Y(y_i) match the reference table", mismatched.is_empty())
            .detail(mismatch_detail(&mismatched)),
    );

    // Cross-group dominance.
    let blocks = [("X1>Y2", inst.x1, inst.y2), ("X2>Y1", inst.x2, inst.y1), ("Y1>X1", inst.y1, inst.x1), ("Y2>X2", inst.y2, inst.x2)];
    let broken: Vec<String> = blocks
        .iter()
        .filter(|(_, w, l)| !w.iter().all(|a| l.iter().all(|b| t.beats(a, b))))
        .map(|(name, _, _)| name.to_string())
        .collect();
    claims.push(
        ClaimEntry::new("cross-structure", "X1 > Y2, X2 > Y1, Y1 > X1, Y2 > X2", broken.is_empty())
            .detail(mismatch_detail(&broken)),
    );

    // TEQ of every dominator set.
    let mut teq_dom = [AltSet::EMPTY; ORDER];
    for a in t.universe() {
        let dom = t.dominators_of(a);
        teq_dom[a] = if dom.is_empty() { AltSet::EMPTY } else { cache.teq_of_subset(dom)? };
    }

    for i in 0..HALF {
        let expected = expected_teq_x(i);
        let got = teq_dom[i];
        claims.push(
            ClaimEntry::new(
                format!("teq-dom-{}", label(i)),
                format!("TEQ(dom_A({})) matches the table and lies inside X", label(i)),
                got == expected && got.is_subset(x),
            )
            .sets(expected, got),
        );
    }
    claims.push(ClaimEntry::new("x-retentive", "X is TEQ-retentive", cache.is_retentive(x)?));

    for i in HALF..ORDER {
        let got = teq_dom[i];
        let mut c = ClaimEntry::new(
            format!("teq-dom-{}", label(i)),
            format!("TEQ(dom_A({})) inside Y", label(i)),
            !got.is_empty() && got.is_subset(y),
        );
        c.computed = Some(got);
        claims.push(c.detail(label_set(got)));
    }
    claims.push(ClaimEntry::new("y-retentive", "Y is TEQ-retentive", cache.is_retentive(y)?));

    claims.push(ClaimEntry::new(
        "disjoint",
        "X and Y are disjoint, nonempty and cover A",
        x.is_disjoint(y) && !x.is_empty() && !y.is_empty() && (x | y) == t.universe(),
    ));

    let tx = t.restrict(x)?;
    let ty = t.restrict(y)?;
    let isomorphism = find_isomorphism(&tx.tournament, &ty.tournament);
    let iso_ok = isomorphism.as_ref().is_some_and(|m| m.is_valid(&tx.tournament, &ty.tournament));
    let iso_detail = match &isomorphism {
        Some(m) => (0..HALF)
            .map(|i| format!("{}->{}", label(tx.to_parent[i]), label(ty.to_parent[m.apply(i)])))
            .collect::<Vec<_>>()
            .join(" "),
        None => "no isomorphism".into(),
    };
    claims.push(ClaimEntry::new("isomorphic", "T|X and T|Y are isomorphic", iso_ok).detail(iso_detail));

    let mut asym = 0;
    for i in 0..HALF {
        for j in 0..HALF {
            if teq_dom[i + HALF].contains(j + HALF) != teq_dom[i].contains(j) {
                asym += 1;
            }
        }
    }
    claims.push(
        ClaimEntry::new("symmetry", "y_j in TEQ(dom_A(y_i)) iff x_j in TEQ(dom_A(x_i)), all 144 pairs", asym == 0)
            .detail(format!("{asym} mismatched pairs")),
    );

    let minimal_sets = cache.minimal_retentive_sets()?;
    let two = minimal_sets.len() >= 2
        && minimal_sets.iter().any(|s| s.is_subset(x))
        && minimal_sets.iter().any(|s| s.is_subset(y));
    claims.push(
        ClaimEntry::new("multiple-minimal", "at least two minimal TEQ-retentive sets, one in X and one in Y", two)
            .detail(format!("{} found", minimal_sets.len())),
    );

    let notes = vec![
        "retentiveness uses non-strict containment: TEQ(dom_A(x)) must be a subset of X, equality allowed".into(),
        "X and Y are not asserted to be minimal themselves; the computed minimal sets are listed above".into(),
        "the tournament not being a counterexample to the weakened conjecture is not checked".into(),
    ];

    Ok(VerificationReport { claims, minimal_sets, isomorphism, notes })
}

fn mismatch_detail(items: &[String]) -> String {
    if items.is_empty() {
        String::new()
    } else {
        format!("mismatch at {}", items.join(", "))
    }
}
