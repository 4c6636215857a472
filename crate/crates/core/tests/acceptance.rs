//! End-to-end acceptance run over the generated corpus: every outer length
//! 4..=8, girth at least 4, at most six internal vertices. Prints one
//! PASS/FAIL line per criterion and exits non-zero if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use precolor_core::coloring_flow::enumerate_outer_colorings;
use precolor_core::criticality::{classify_8cycle, r_of};
use precolor_core::crosscheck::{run_corpus, Check, Summary};
use precolor_core::generator::{cycle_graph, enumerate_fillings, fixture, GenSpec};

const BUDGET: usize = 6;

struct Report {
    failures: usize,
}

impl Report {
    fn line(&mut self, n: usize, title: &str, ok: bool, detail: String) {
        if !ok {
            self.failures += 1;
        }
        println!(
            "criterion {n:>2} {} {title}: {detail}",
            if ok { "PASS" } else { "FAIL" }
        );
    }
}

fn clean(s: &Summary, checks: &[Check]) -> bool {
    checks
        .iter()
        .all(|&c| s.tally(c).failed == 0 && s.tally(c).checked > 0)
}

fn counts(s: &Summary, checks: &[Check]) -> String {
    checks
        .iter()
        .map(|&c| {
            format!(
                "{c} {}/{}",
                s.tally(c).checked - s.tally(c).failed,
                s.tally(c).checked
            )
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn main() -> ExitCode {
    let mut by_k: BTreeMap<usize, Summary> = BTreeMap::new();
    let mut all = Summary::default();
    for k in 4..=8 {
        let start = Instant::now();
        let s = run_corpus(&GenSpec::new(k, BUDGET, 4).unwrap());
        println!(
            "corpus k={k}: {} graphs, {} precolorings, {} critical ({:.1?})",
            s.graphs,
            s.pairs,
            s.critical,
            start.elapsed()
        );
        all.merge(s.clone());
        by_k.insert(k, s);
    }
    for m in &all.mismatches {
        println!("---\n{}", m.report());
    }
    print!("{}", all.table());

    let mut r = Report { failures: 0 };

    r.line(
        1,
        "flow solver agrees with the oracle",
        clean(&all, &[Check::OracleAgreement, Check::WitnessValid]),
        counts(&all, &[Check::OracleAgreement, Check::WitnessValid]),
    );

    let k6 = &by_k[&6];
    r.line(
        2,
        "outer 6-cycles",
        clean(k6, &[Check::SixCycle, Check::Quadrangulation]) && clean(&all, &[Check::SixCycle]),
        format!(
            "{}; {} critical",
            counts(k6, &[Check::SixCycle, Check::Quadrangulation]),
            k6.critical
        ),
    );

    let quads_ok = [6, 8]
        .iter()
        .all(|k| clean(&by_k[k], &[Check::Quadrangulation]));
    r.line(
        3,
        "quadrangulations of 6- and 8-cycles",
        quads_ok,
        format!(
            "k=6 {}, k=8 {}",
            counts(&by_k[&6], &[Check::Quadrangulation]),
            counts(&by_k[&8], &[Check::Quadrangulation])
        ),
    );

    let km2 = [Check::KMinus2Critical, Check::KMinus2Extension];
    let threshold_ok = [7, 8].iter().all(|&k| {
        let s = &by_k[&k];
        s.k_minus_2_min_path
            .get(&k)
            .is_some_and(|&len| len >= r_of(k))
    }) && r_of(7) == 2
        && r_of(8) == 1;
    r.line(
        4,
        "one (k-2)-face",
        [7, 8].iter().all(|k| clean(&by_k[k], &km2)) && threshold_ok,
        format!(
            "k=7 {}, shortest critical path {:?} (r=2), {} below r; k=8 {}, shortest critical path {:?} (r=1), {} below r",
            counts(&by_k[&7], &km2),
            by_k[&7].k_minus_2_min_path.get(&7),
            by_k[&7].k_minus_2_short_path.get(&7).unwrap_or(&0),
            counts(&by_k[&8], &km2),
            by_k[&8].k_minus_2_min_path.get(&8),
            by_k[&8].k_minus_2_short_path.get(&8).unwrap_or(&0),
        ),
    );

    let k7 = &by_k[&7];
    let cases: Vec<String> = k7
        .seven_cases
        .iter()
        .map(|(c, n)| format!("{c}={n}"))
        .collect();
    r.line(
        5,
        "outer 7-cycles",
        clean(k7, &[Check::SevenCycle]) && !k7.seven_cases.is_empty(),
        format!(
            "{}; critical non-extendable pairs {}",
            counts(k7, &[Check::SevenCycle]),
            cases.join(" ")
        ),
    );

    let k8 = &by_k[&8];
    let all_cases = ["A", "B", "C", "D"]
        .iter()
        .all(|c| k8.eight_classes.get(*c).copied().unwrap_or(0) > 0);
    let chord_is_c =
        classify_8cycle(&fixture("C8_CHORD").unwrap()).is_ok_and(|c| c.letter() == "C");
    let classes: Vec<String> = k8
        .eight_classes
        .iter()
        .map(|(c, n)| format!("{c}={n}"))
        .collect();
    r.line(
        6,
        "outer 8-cycles",
        clean(k8, &[Check::EightCycle, Check::KnownSets]) && all_cases && chord_is_c,
        format!(
            "{}; classes {}; 8-cycle with chord is C: {chord_is_c}",
            counts(k8, &[Check::EightCycle, Check::KnownSets]),
            classes.join(" ")
        ),
    );

    r.line(
        7,
        "face excesses of coloring orientations",
        clean(&all, &[Check::FlowArithmetic]),
        counts(&all, &[Check::FlowArithmetic]),
    );

    r.line(
        8,
        "small cuts have the path or cycle shape",
        clean(&all, &[Check::CutStructure]),
        counts(&all, &[Check::CutStructure]),
    );

    r.line(
        9,
        "orientation round trip",
        clean(&all, &[Check::RoundTrip]),
        counts(&all, &[Check::RoundTrip]),
    );

    let outer_counts: Vec<usize> = (4..=8)
        .map(|k| enumerate_outer_colorings(&cycle_graph(k)).len())
        .collect();
    let tiny: Vec<usize> = [(4, 0, 4), (5, 0, 4), (6, 0, 4), (6, 1, 4), (8, 0, 5)]
        .iter()
        .map(|&(k, b, girth)| enumerate_fillings(&GenSpec::new(k, b, girth).unwrap()).len())
        .collect();
    r.line(
        10,
        "small counts",
        outer_counts == [3, 5, 11, 21, 43] && tiny == [1, 1, 2, 6, 2],
        format!("precolorings for k=4..8 {outer_counts:?}, tiny corpora {tiny:?}"),
    );

    println!("girth five: {}", counts(&all, &[Check::GirthFive]));
    for (k, sets) in &all.realized_sets {
        println!("realized long-face sets k={k}: {sets:?}");
    }

    if r.failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
