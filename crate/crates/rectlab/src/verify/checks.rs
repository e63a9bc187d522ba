use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::Debug;

use num_bigint::BigUint;
use num_rational::BigRational;

use super::{Fixture, SAMPLE_PERMUTATION};
use crate::biject::{backward_strong, backward_weak, diagonal_layout, flips, gamma_s, gamma_w, quotient_cover_graph};
use crate::enumerate::{
    baxter_number, growth_constants, schroder_series, strong_count_via_multiplicity, strong_guillotine_table,
    weighted_closed_form_y2, weighted_guillotine_series,
};
use crate::perm::{inversion_set, PermClass, Permutation};
use crate::rect::{Format, Rectangulation};
use crate::walks::{
    count_o, count_strong_rect, count_u, encode_strong, excursions, nit_count, HistoryQuadrantWalk, Variant,
};

fn expect_eq<T: PartialEq + Debug>(what: impl FnOnce() -> String, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{}: got {got:?}, expected {want:?}", what()))
    }
}

fn expect(what: impl FnOnce() -> String, cond: bool) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn fixture_term(f: &Fixture, n: usize) -> Result<&BigUint, String> {
    f.term(n).ok_or_else(|| format!("fixture `{}` has no term for n = {n}", f.key))
}

pub fn sample_permutation() -> Permutation {
    Permutation::new(SAMPLE_PERMUTATION.to_vec()).expect("valid permutation")
}

/// Recomputes the fixture terms up to `upto` from their generating method.
pub fn sequence_matches(f: &Fixture, upto: usize) -> Result<String, String> {
    let last = f.last_n().min(upto);
    let computed: Vec<BigUint> = match f.key.as_str() {
        "schroder" => {
            let s = schroder_series(last);
            (f.first_n..=last).map(|n| s.g.natural(n).expect("integral")).collect()
        }
        "little-schroder" => {
            let s = schroder_series(last);
            (f.first_n..=last).map(|n| s.h.natural(n).expect("integral")).collect()
        }
        "baxter" => (f.first_n..=last).map(baxter_number).collect(),
        "strong" => (f.first_n..=last).map(count_strong_rect).collect(),
        "one-sided" => (f.first_n..=last).map(count_o).collect(),
        "leftright" => (f.first_n..=last).map(count_u).collect(),
        "strong-guillotine" => {
            let table = strong_guillotine_table(last);
            (f.first_n..=last).map(|n| table.total(n)).collect()
        }
        other => return Err(format!("no generator for fixture `{other}`")),
    };
    for (i, c) in computed.iter().enumerate() {
        let n = f.first_n + i;
        expect_eq(|| format!("{} at n = {n}", f.key), c, &f.terms[i])?;
    }
    Ok(format!("n = {}..{last}", f.first_n))
}

/// Distinct `gamma_w` images over `S_n` against the Baxter numbers.
pub fn weak_counts(max_n: usize, baxter: &Fixture) -> Result<(), String> {
    for n in 1..=max_n {
        let images: HashSet<Rectangulation> = Permutation::all(n).map(|p| gamma_w(&p)).collect();
        let count = BigUint::from(images.len());
        expect_eq(|| format!("weak images at n = {n}"), &count, fixture_term(baxter, n)?)?;
        expect_eq(|| format!("baxter formula at n = {n}"), &count, &baxter_number(n))?;
    }
    Ok(())
}

/// Distinct strong classes of `gamma_s` images against the fixture and the
/// leftmost-excursion count.
pub fn strong_counts(max_n: usize, strong: &Fixture) -> Result<(), String> {
    for n in 1..=max_n {
        let keys: BTreeSet<Permutation> = Permutation::all(n).map(|p| gamma_s(&p).strong_key()).collect();
        let count = BigUint::from(keys.len());
        expect_eq(|| format!("strong images at n = {n}"), &count, fixture_term(strong, n)?)?;
        expect_eq(|| format!("leftmost excursions at n = {n}"), &count, &count_strong_rect(n))?;
    }
    Ok(())
}

/// `gamma_w(p)` guillotine iff `gamma_s(p)` guillotine iff `p` avoids both
/// windmill patterns.
pub fn guillotine_equivalence(max_n: usize) -> Result<(), String> {
    for n in 1..=max_n {
        for p in Permutation::all(n) {
            let avoids = PermClass::P1P2Avoiding.contains(&p);
            expect_eq(|| format!("weak image of {p}"), gamma_w(&p).is_guillotine(), avoids)?;
            expect_eq(|| format!("strong image of {p}"), gamma_s(&p).is_guillotine(), avoids)?;
        }
    }
    Ok(())
}

/// Table totals against multiplicities, windmill-free 2-clumped
/// permutations and, for `n <= 7`, distinct guillotine `gamma_s` images.
pub fn guillotine_cross_checks(max_n: usize, table: &Fixture) -> Result<(), String> {
    let computed = strong_guillotine_table(max_n);
    for n in 1..=max_n {
        let want = fixture_term(table, n)?;
        expect_eq(|| format!("recurrence at n = {n}"), &computed.total(n), want)?;
        let via_multiplicity = strong_count_via_multiplicity(n, true).map_err(|e| e.to_string())?;
        expect_eq(|| format!("multiplicities at n = {n}"), &via_multiplicity, want)?;
        let clumped = Permutation::all(n)
            .filter(|p| PermClass::TwoClumped.contains(p) && PermClass::P1P2Avoiding.contains(p))
            .count();
        expect_eq(|| format!("windmill-free 2-clumped at n = {n}"), &BigUint::from(clumped), want)?;
        if n <= 7 {
            let keys: BTreeSet<_> = Permutation::all(n)
                .map(|p| gamma_s(&p))
                .filter(|r| r.is_guillotine())
                .map(|r| r.strong_key())
                .collect();
            expect_eq(|| format!("guillotine strong images at n = {n}"), &BigUint::from(keys.len()), want)?;
        }
    }
    Ok(())
}

fn weak_leq(a: &Permutation, b: &Permutation) -> bool {
    inversion_set(a).is_subset(&inversion_set(b))
}

/// Fiber checks shared by both equivalences: the poset and geometric routes
/// agree, the fiber is the weak order interval between the first two
/// members of `unique`, and each class of `unique` meets the fiber exactly
/// in its paired permutation.
fn fiber_structure(
    n: usize,
    classes: BTreeMap<Permutation, Rectangulation>,
    fiber: impl Fn(&Rectangulation) -> BTreeSet<Permutation>,
    backward: impl Fn(&Rectangulation) -> BTreeSet<Permutation>,
    unique: impl Fn(&Rectangulation) -> Vec<(PermClass, Permutation)>,
) -> Result<(), String> {
    let all: Vec<Permutation> = Permutation::all(n).collect();
    let mut seen = 0;
    for (key, r) in &classes {
        let members = fiber(r);
        expect_eq(|| format!("backward route for {key}"), &backward(r), &members)?;
        let low = members.iter().find(|p| members.iter().all(|q| weak_leq(p, q)));
        let high = members.iter().find(|p| members.iter().all(|q| weak_leq(q, p)));
        let (Some(low), Some(high)) = (low, high) else {
            return Err(format!("fiber of {key} has no minimum or maximum"));
        };
        let interval: BTreeSet<Permutation> =
            all.iter().filter(|p| weak_leq(low, p) && weak_leq(p, high)).cloned().collect();
        expect_eq(|| format!("interval [{low}, {high}]"), &interval, &members)?;
        let unique = unique(r);
        expect_eq(|| format!("minimum of the fiber of {key}"), low, &unique[0].1)?;
        expect_eq(|| format!("maximum of the fiber of {key}"), high, &unique[1].1)?;
        for (class, want) in unique {
            let inside: Vec<_> = members.iter().filter(|p| class.contains(p)).collect();
            expect_eq(|| format!("{class} members of the fiber of {key}"), inside, vec![&want])?;
        }
        seen += members.len();
    }
    expect_eq(|| format!("fibers partition S_{n}"), seen, all.len())
}

/// Strong fibers over the `S_n` sweep.
pub fn strong_fiber_structure(n: usize) -> Result<(), String> {
    let classes: BTreeMap<_, _> = Permutation::all(n).map(|p| gamma_s(&p)).map(|r| (r.strong_key(), r)).collect();
    fiber_structure(n, classes, Rectangulation::fiber_s, backward_strong, |r| {
        let poset = r.strong_poset();
        vec![
            (PermClass::TwoClumped, poset.leftmost_extension()),
            (PermClass::CoTwoClumped, poset.rightmost_extension()),
        ]
    })
}

/// Weak fibers over the `S_n` sweep.
pub fn weak_fiber_structure(n: usize) -> Result<(), String> {
    let classes: BTreeMap<_, _> = Permutation::all(n).map(|p| gamma_w(&p)).map(|r| (r.weak_key(), r)).collect();
    fiber_structure(n, classes, Rectangulation::fiber_w, backward_weak, |r| {
        let poset = r.weak_poset();
        vec![
            (PermClass::TwistedBaxter, poset.leftmost_extension()),
            (PermClass::CoTwistedBaxter, poset.rightmost_extension()),
            (PermClass::Baxter, r.baxter_representative()),
        ]
    })
}

/// Connectivity, lattice property and local flips of the quotient graph.
pub fn flip_graph(max_n: usize) -> Result<(), String> {
    for n in 1..=max_n {
        let g = quotient_cover_graph(n).map_err(|e| e.to_string())?;
        expect(|| format!("quotient graph at n = {n} is disconnected"), g.is_connected())?;
        expect(|| format!("quotient order at n = {n} is not a lattice"), g.is_lattice())?;
        let index: BTreeMap<&Permutation, usize> = g.vertices().iter().enumerate().map(|(i, p)| (p, i)).collect();
        for (i, key) in g.vertices().iter().enumerate() {
            let local: BTreeSet<usize> = flips(&gamma_s(key)).iter().map(|(_, r)| index[&r.strong_key()]).collect();
            expect_eq(|| format!("flips of {key}"), local, g.neighbors(i))?;
        }
    }
    Ok(())
}

/// Strong encoding is a bijection from strong classes onto leftmost
/// excursions, and the leftmost pin holds at size 5.
pub fn walk_encoding(max_n: usize) -> Result<(), String> {
    for n in 1..=max_n {
        let encoded: BTreeSet<String> = Permutation::all(n).map(|p| encode_strong(&p).to_text()).collect();
        let walks: BTreeSet<String> = excursions(n, Variant::Strong).iter().map(HistoryQuadrantWalk::to_text).collect();
        expect_eq(|| format!("encodings at n = {n}"), encoded.len(), (1..=n).product())?;
        expect_eq(|| format!("excursions at n = {n}"), &encoded, &walks)?;
        for p in Permutation::all(n) {
            let w = encode_strong(&p);
            let key = gamma_s(&p).strong_key();
            expect_eq(|| format!("leftmost walk of {p}"), w.is_leftmost(), p == key)?;
            let decoded = w.decode().map_err(|e| e.to_string())?;
            expect_eq(|| format!("decoding of {p}"), decoded.strong_key(), key)?;
        }
    }
    expect_eq(|| "leftmost excursions at n = 5".into(), count_strong_rect(5), BigUint::from(116u32))
}

pub fn nit_is_baxter(max_n: usize) -> Result<(), String> {
    for n in 1..=max_n {
        expect_eq(|| format!("triples at n = {n}"), nit_count(n), baxter_number(n))?;
    }
    Ok(())
}

/// Strong classes without a Z-wall against semi-Baxter permutations.
pub fn z_wall_counts(max_n: usize) -> Result<(), String> {
    for n in 1..=max_n {
        let classes: BTreeMap<_, _> = Permutation::all(n).map(|p| gamma_s(&p)).map(|r| (r.strong_key(), r)).collect();
        let free = classes.values().filter(|r| !r.has_z_wall()).count();
        let semi = Permutation::all(n).filter(|p| PermClass::SemiBaxter.contains(p)).count();
        expect_eq(|| format!("Z-wall-free classes at n = {n}"), free, semi)?;
    }
    Ok(())
}

pub fn constants() -> Result<(), String> {
    let c = growth_constants(12);
    let close = |what: &str, a: f64, b: f64, tol: f64| expect(|| format!("{what}: {a} vs {b}"), (a - b).abs() <= tol);
    close("spectral radius", c.gamma, c.gamma_closed_form, 1e-9)?;
    close("second spectral radius", c.gamma_prime, c.gamma_prime_closed_form, 1e-9)?;
    expect_eq(|| "rho(0)".into(), &c.rho_zero, &BigRational::new(2.into(), 27.into()))?;
    close("x0 bracket", c.x0, 13.155, 1e-3)?;
    close("x0 residual", crate::enumerate::x0_polynomial(c.x0) / 1e5, 0.0, 1e-9)?;
    close("x0 against z = rho(-2z)", c.x0, c.x0_via_rho, 1e-9)?;
    close("lower bound", c.lower_bound, c.lower_bound_closed_form, 1e-9)?;
    expect(|| format!("z0 bound {} above 13.081 + 1e-3", c.z0_bound), c.z0_bound <= 13.081 + 1e-3)?;
    expect(|| format!("z0 bound {} above x0", c.z0_bound), c.z0_bound <= c.x0)?;
    let two = BigRational::from_integer(2.into());
    expect_eq(|| "weighted series at y = 2".into(), weighted_guillotine_series(&two, 20), weighted_closed_form_y2(20))
}

#[derive(serde::Deserialize)]
struct LayoutRect {
    label: usize,
    x1: usize,
    y1: usize,
    x2: usize,
    y2: usize,
}

#[derive(serde::Deserialize)]
struct Layout {
    n: usize,
    rects: Vec<LayoutRect>,
}

/// The frozen diagonal layout of the sample permutation, coordinate for
/// coordinate, and its weak class.
pub fn sample_diagonal(text: &str) -> Result<(), String> {
    let p = sample_permutation();
    let layout: Layout = serde_json::from_str(text).map_err(|e| format!("line {}: {e}", e.line()))?;
    expect_eq(|| "layout size".into(), layout.n, p.len())?;
    let frozen: Vec<_> = layout.rects.iter().map(|r| (r.label, r.x1, r.y1, r.x2, r.y2)).collect();
    let fresh: Vec<_> =
        diagonal_layout(&p).iter().map(|r| (r.label, r.x_left, r.y_top, r.x_right, r.y_bottom)).collect();
    expect_eq(|| "diagonal layout".into(), frozen, fresh)?;
    let r = Rectangulation::from_json(text).map_err(|e| e.to_string())?;
    expect_eq(|| "weak class".into(), r.weak_key(), gamma_w(&p).weak_key())?;
    let svg = r.render(Format::Svg);
    expect(|| "svg is not well formed".into(), svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"))
}

pub fn sample_strong(text: &str) -> Result<(), String> {
    let p = sample_permutation();
    let r = Rectangulation::from_json(text).map_err(|e| e.to_string())?;
    expect_eq(|| "strong image".into(), &r, &gamma_s(&p))?;
    expect(|| "sample permutation outside its fiber".into(), r.fiber_s().contains(&p))
}

pub fn sample_walk(text: &str) -> Result<(), String> {
    let p = sample_permutation();
    let w = HistoryQuadrantWalk::from_text(text, Variant::Strong).map_err(|e| e.to_string())?;
    expect(|| "walk is not a leftmost excursion".into(), w.is_excursion() && w.is_leftmost())?;
    let r = w.decode().map_err(|e| e.to_string())?;
    expect_eq(|| "decoded class".into(), r.strong_key(), gamma_s(&p).strong_key())
}
