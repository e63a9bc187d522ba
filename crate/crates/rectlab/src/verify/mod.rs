//! Fixture-driven verification sweeps with a machine-readable report.

mod checks;

use std::time::Instant;

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

pub use checks::*;

pub const SEQUENCES: &str = include_str!("../../fixtures/sequences.txt");
pub const DIAGONAL16: &str = include_str!("../../fixtures/diagonal16.json");
pub const STRONG16: &str = include_str!("../../fixtures/strong16.json");
pub const WALK16: &str = include_str!("../../fixtures/walk16.txt");
/// The permutation whose images are frozen in the sample fixtures.
pub const SAMPLE_PERMUTATION: [usize; 16] = [7, 5, 14, 8, 1, 6, 15, 11, 4, 10, 16, 2, 9, 13, 3, 12];

/// Default cap on exhaustive sweeps over `S_n`.
pub const DEFAULT_MAX_N: usize = 6;
/// Default number of strong guillotine table rows recomputed.
pub const DEFAULT_TABLE_ROWS: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("line {line}: {message}")]
    Fixture { line: usize, message: String },
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("missing fixture `{0}`")]
    MissingFixture(String),
}

/// A reference sequence `terms[i] = a(first_n + i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub key: String,
    pub oeis: Option<String>,
    pub first_n: usize,
    pub terms: Vec<BigUint>,
}

impl Fixture {
    pub fn term(&self, n: usize) -> Option<&BigUint> {
        n.checked_sub(self.first_n).and_then(|i| self.terms.get(i))
    }

    pub fn last_n(&self) -> usize {
        self.first_n + self.terms.len() - 1
    }
}

/// Lines of `key oeis-id first-n terms...`; `#` starts a comment and `-`
/// marks a missing id.
pub fn parse_fixtures(text: &str) -> Result<Vec<Fixture>, VerifyError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let err = |message: String| VerifyError::Fixture { line: i + 1, message };
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() < 4 {
            return Err(err("expected key, id, first index and at least one term".into()));
        }
        let first_n = fields[2].parse().map_err(|_| err(format!("bad index `{}`", fields[2])))?;
        let terms = fields[3..]
            .iter()
            .map(|t| t.parse::<BigUint>().map_err(|_| err(format!("bad term `{t}`"))))
            .collect::<Result<_, _>>()?;
        let oeis = (fields[1] != "-").then(|| fields[1].to_string());
        out.push(Fixture { key: fields[0].to_string(), oeis, first_n, terms });
    }
    Ok(out)
}

/// Fixture texts a run reads; defaults to the embedded copies.
#[derive(Clone, Debug)]
pub struct Inputs {
    pub sequences: String,
    pub diagonal16: String,
    pub strong16: String,
    pub walk16: String,
}

impl Default for Inputs {
    fn default() -> Self {
        Inputs {
            sequences: SEQUENCES.into(),
            diagonal16: DIAGONAL16.into(),
            strong16: STRONG16.into(),
            walk16: WALK16.into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_n: usize,
    pub table_rows: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_n: DEFAULT_MAX_N, table_rows: DEFAULT_TABLE_ROWS }
    }
}

impl Bounds {
    /// Defaults, with `max_n` read from `RECTLAB_MAX_N` when it parses.
    pub fn from_env() -> Self {
        let max_n = std::env::var("RECTLAB_MAX_N").ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_MAX_N);
        Bounds { max_n, ..Bounds::default() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub millis: f64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, suite: &str, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.suite == suite && c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// One `PASS|FAIL suite/name (ms) detail` line per check.
    pub fn to_text(&self) -> String {
        self.checks
            .iter()
            .map(|c| {
                let status = if c.passed { "PASS" } else { "FAIL" };
                let detail = if c.detail.is_empty() { String::new() } else { format!(" {}", c.detail) };
                format!("{status} {}/{} ({:.1} ms){detail}\n", c.suite, c.name, c.millis)
            })
            .collect()
    }
}

/// Suite names in run order.
pub const SUITES: [&str; 9] =
    ["constants", "fibers", "flips", "guillotine", "samples", "sequences", "strong", "walks", "weak"];

fn timed(suite: &str, name: &str, f: impl FnOnce() -> Result<String, String>) -> Check {
    let start = Instant::now();
    let (passed, detail) = match f() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Check { suite: suite.into(), name: name.into(), passed, detail, millis: start.elapsed().as_secs_f64() * 1e3 }
}

fn ok(r: Result<(), String>) -> Result<String, String> {
    r.map(|()| String::new())
}

fn fixture<'a>(fixtures: &'a Result<Vec<Fixture>, VerifyError>, key: &str) -> Result<&'a Fixture, String> {
    let all = fixtures.as_ref().map_err(|e| e.to_string())?;
    all.iter().find(|f| f.key == key).ok_or_else(|| VerifyError::MissingFixture(key.into()).to_string())
}

fn run_suite(suite: &str, inputs: &Inputs, bounds: Bounds) -> Result<Vec<Check>, VerifyError> {
    let fixtures = parse_fixtures(&inputs.sequences);
    let n = bounds.max_n;
    let mut out = Vec::new();
    let mut add = |name: &str, f: &dyn Fn() -> Result<String, String>| out.push(timed(suite, name, f));
    match suite {
        "constants" => add("closed-forms", &|| ok(constants())),
        "fibers" => {
            add("strong", &|| ok((1..=n.min(7)).try_for_each(strong_fiber_structure)));
            add("weak", &|| ok((1..=n.min(7)).try_for_each(weak_fiber_structure)));
        }
        "samples" => {
            add("diagonal-layout", &|| ok(sample_diagonal(&inputs.diagonal16)));
            add("strong-image", &|| ok(sample_strong(&inputs.strong16)));
            add("walk", &|| ok(sample_walk(&inputs.walk16)));
        }
        "flips" => add("quotient", &|| ok(flip_graph(n.min(5)))),
        "guillotine" => {
            add("equivalence", &|| ok(guillotine_equivalence(n)));
            add("cross-methods", &|| ok(guillotine_cross_checks(n.min(8), fixture(&fixtures, "strong-guillotine")?)));
        }
        "sequences" => {
            let all = match &fixtures {
                Ok(all) => all.clone(),
                Err(e) => {
                    add("parse", &|| Err(e.to_string()));
                    Vec::new()
                }
            };
            for f in &all {
                let upto = match f.key.as_str() {
                    "strong-guillotine" => bounds.table_rows,
                    _ => usize::MAX,
                };
                add(&f.key, &|| sequence_matches(f, upto));
            }
        }
        "strong" => add("images", &|| ok(strong_counts(n.min(8), fixture(&fixtures, "strong")?))),
        "walks" => {
            add("encoding", &|| ok(walk_encoding(n.min(7))));
            add("nit-baxter", &|| ok(nit_is_baxter(12)));
            add("z-wall", &|| ok(z_wall_counts(n.min(7))));
        }
        "weak" => add("images", &|| ok(weak_counts(n.min(8), fixture(&fixtures, "baxter")?))),
        other => return Err(VerifyError::UnknownSuite(other.into())),
    }
    Ok(out)
}

/// Runs the named suites, or all of them when `suites` is empty, in
/// suite-name order.
pub fn verify_with(inputs: &Inputs, suites: &[&str], bounds: Bounds) -> Result<Report, VerifyError> {
    let mut names: Vec<&str> = if suites.is_empty() { SUITES.to_vec() } else { suites.to_vec() };
    names.sort_unstable();
    names.dedup();
    let mut report = Report::default();
    for s in names {
        report.checks.extend(run_suite(s, inputs, bounds)?);
    }
    Ok(report)
}

/// Every suite against the embedded fixtures.
pub fn verify_fixtures(bounds: Bounds) -> Report {
    verify_with(&Inputs::default(), &[], bounds).expect("built-in suite names")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_fixtures_parse() {
        let all = parse_fixtures(SEQUENCES).unwrap();
        let ids: Vec<_> = all.iter().filter_map(|f| f.oeis.as_deref()).collect();
        assert_eq!(ids, ["A006318", "A001003", "A001181", "A342141", "A348351"]);
        let table = all.iter().find(|f| f.key == "strong-guillotine").unwrap();
        assert_eq!(table.last_n(), 32);
        assert_eq!(table.term(32).unwrap().to_string(), "85899976772035554402923170");
    }

    #[test]
    fn malformed_fixture_names_the_line() {
        let err = parse_fixtures("# header\nbaxter - 1 1 2 x\n").unwrap_err();
        assert_eq!(err, VerifyError::Fixture { line: 2, message: "bad term `x`".into() });
    }

    #[test]
    fn default_run_passes() {
        let report = verify_fixtures(Bounds { max_n: 5, table_rows: 12 });
        assert!(report.passed(), "{}", report.to_text());
        assert!(report.checks.iter().all(|c| c.millis >= 0.0));
        assert_eq!(report.checks.first().unwrap().suite, "constants");
    }

    #[test]
    fn tampered_fixture_fails_only_its_checks() {
        let bounds = Bounds { max_n: 5, table_rows: 10 };
        let inputs = Inputs { sequences: SEQUENCES.replace(" 22 92 ", " 22 93 "), ..Inputs::default() };
        let report = verify_with(&inputs, &[], bounds).unwrap();
        let failed: Vec<_> = report.failures().map(|c| format!("{}/{}", c.suite, c.name)).collect();
        assert_eq!(failed, ["sequences/baxter", "weak/images"]);
    }

    #[test]
    fn tampered_sample_fails() {
        let inputs = Inputs { walk16: WALK16.replacen("black", "red", 1), ..Inputs::default() };
        let report = verify_with(&inputs, &["samples"], Bounds::default()).unwrap();
        assert!(!report.check("samples", "walk").unwrap().passed);
        assert!(report.check("samples", "strong-image").unwrap().passed);
    }

    #[test]
    fn unknown_suite() {
        assert_eq!(
            verify_with(&Inputs::default(), &["nope"], Bounds::default()).unwrap_err(),
            VerifyError::UnknownSuite("nope".into())
        );
    }
}
