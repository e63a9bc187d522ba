//! One PASS/FAIL line per acceptance criterion; exits non-zero on any FAIL.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rectlab::enumerate::strong_guillotine_table;
use rectlab::verify::{
    constants, flip_graph, guillotine_cross_checks, guillotine_equivalence, nit_is_baxter, parse_fixtures,
    sequence_matches, strong_counts, strong_fiber_structure, weak_counts, weak_fiber_structure, z_wall_counts, Fixture,
    SEQUENCES,
};
use rectlab::walks::{count_o, count_strong_rect, count_u};

fn fixture(key: &str) -> Fixture {
    parse_fixtures(SEQUENCES).unwrap().into_iter().find(|f| f.key == key).unwrap()
}

fn terms(f: &Fixture, upto: usize, g: impl Fn(usize) -> BigUint) -> Result<(), String> {
    for n in f.first_n..=upto {
        let (got, want) = (g(n), f.term(n).unwrap());
        if &got != want {
            return Err(format!("{} at n = {n}: got {got}, expected {want}", f.key));
        }
    }
    Ok(())
}

struct Criterion {
    id: u32,
    summary: &'static str,
    budget: Duration,
    run: fn() -> Result<(), String>,
}

fn c1() -> Result<(), String> {
    weak_counts(6, &fixture("baxter"))
}

fn c2() -> Result<(), String> {
    let strong = fixture("strong");
    strong_counts(7, &strong)?;
    terms(&strong, 10, count_strong_rect)
}

fn c3() -> Result<(), String> {
    let table = fixture("strong-guillotine");
    let computed = strong_guillotine_table(12);
    terms(&table, 12, |n| computed.total(n))?;
    guillotine_cross_checks(8, &table)
}

fn c4() -> Result<(), String> {
    let start = Instant::now();
    terms(&fixture("leftright"), 10, count_u)?;
    let u_time = start.elapsed();
    terms(&fixture("one-sided"), 10, count_o)?;
    let o_time = start.elapsed() - u_time;
    if u_time.max(o_time) >= Duration::from_secs(10) {
        return Err(format!("U took {u_time:?}, O took {o_time:?}"));
    }
    Ok(())
}

fn c5() -> Result<(), String> {
    guillotine_equivalence(8)
}

fn c6() -> Result<(), String> {
    strong_fiber_structure(6)?;
    weak_fiber_structure(6)
}

fn c7() -> Result<(), String> {
    flip_graph(5)
}

fn c8() -> Result<(), String> {
    if count_strong_rect(5) != BigUint::from(116u32) {
        return Err("leftmost excursions at n = 5".into());
    }
    nit_is_baxter(12)?;
    z_wall_counts(7)
}

fn c9() -> Result<(), String> {
    constants()
}

/// Stretch: the remaining table rows. The growth-rate proof and the
/// conjectured exponents have no computational counterpart.
fn c10() -> Result<(), String> {
    sequence_matches(&fixture("strong-guillotine"), 32).map(|_| ())
}

const CRITERIA: [Criterion; 10] = [
    Criterion { id: 1, summary: "weak images equal Baxter numbers, n <= 6", budget: Duration::from_secs(30), run: c1 },
    Criterion {
        id: 2,
        summary: "strong images n <= 7, leftmost excursions n <= 10",
        budget: Duration::from_secs(120),
        run: c2,
    },
    Criterion {
        id: 3,
        summary: "strong guillotine table n <= 12, cross-checked n <= 8",
        budget: Duration::from_secs(600),
        run: c3,
    },
    Criterion { id: 4, summary: "U_n and O_n, n <= 10", budget: Duration::from_secs(20), run: c4 },
    Criterion {
        id: 5,
        summary: "guillotine iff windmill-pattern avoiding, n <= 8",
        budget: Duration::from_secs(600),
        run: c5,
    },
    Criterion { id: 6, summary: "strong and weak fiber structure over S_6", budget: Duration::from_secs(300), run: c6 },
    Criterion {
        id: 7,
        summary: "quotient graph connected, lattice, local flips, n <= 5",
        budget: Duration::from_secs(60),
        run: c7,
    },
    Criterion {
        id: 8,
        summary: "leftmost pin, triples n <= 12, Z-walls n <= 7",
        budget: Duration::from_secs(300),
        run: c8,
    },
    Criterion { id: 9, summary: "growth constants and weighted closed form", budget: Duration::from_secs(60), run: c9 },
    Criterion { id: 10, summary: "stretch: table rows 17..32", budget: Duration::from_secs(600), run: c10 },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome =
            outcome.and_then(|()| if elapsed > c.budget { Err(format!("over budget {:?}", c.budget)) } else { Ok(()) });
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS {} ({:.2}s)", c.id, c.summary, elapsed.as_secs_f64()),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2}: FAIL {} ({:.2}s): {e}", c.id, c.summary, elapsed.as_secs_f64());
            }
        }
    }
    println!("criterion 10: NOT RUN growth-rate proof and conjectured asymptotic exponents");
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
