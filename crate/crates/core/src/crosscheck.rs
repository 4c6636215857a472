//! Corpus-wide consistency checks: the flow solver against the brute-force
//! oracle, and brute-force criticality against the structural classifiers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::coloring_flow::{
    brute_force_extend, coloring_from_orientation, enumerate_outer_colorings, orient_dual, Coloring,
};
use crate::criticality::{
    check_k_minus_2, check_quadrangulation, classify_8cycle, is_c_critical_given,
    known_critical_sets, seven_cycle_configurations, SevenCycleCase,
};
use crate::extension_solver::{decide_extension, Verdict};
use crate::generator::{for_each_filling, GenSpec};
use crate::plane_graph::PlaneGraph;

/// One family of checks, tallied separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// Flow verdict equals the oracle verdict.
    OracleAgreement,
    /// Flow witnesses are proper and extend the precoloring.
    WitnessValid,
    /// Outer cycles up to six: criticality and non-extendable colorings.
    SixCycle,
    /// Quadrangulations: critical iff no separating 4-cycle.
    Quadrangulation,
    /// One `(k-2)`-face: critical iff conditions (a), (b), (c).
    KMinus2Critical,
    /// One `(k-2)`-face: extension iff a source and a sink edge off the face.
    KMinus2Extension,
    /// 7-cycle configurations versus critical, non-extendable pairs.
    SevenCycle,
    /// 8-cycle classification versus criticality, with evidence.
    EightCycle,
    /// Face excesses of coloring orientations.
    FlowArithmetic,
    /// Small cuts yield a path or cycle satisfying its inequality.
    CutStructure,
    /// Colorings survive orientation and back.
    RoundTrip,
    /// Face-length multisets of critical graphs lie in the known sets.
    KnownSets,
    /// Girth five: critical iff an 8-cycle with a chord.
    GirthFive,
}

impl Check {
    pub const ALL: [Check; 13] = [
        Check::OracleAgreement,
        Check::WitnessValid,
        Check::SixCycle,
        Check::Quadrangulation,
        Check::KMinus2Critical,
        Check::KMinus2Extension,
        Check::SevenCycle,
        Check::EightCycle,
        Check::FlowArithmetic,
        Check::CutStructure,
        Check::RoundTrip,
        Check::KnownSets,
        Check::GirthFive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::OracleAgreement => "oracle-agreement",
            Check::WitnessValid => "witness-valid",
            Check::SixCycle => "six-cycle",
            Check::Quadrangulation => "quadrangulation",
            Check::KMinus2Critical => "k-minus-2-critical",
            Check::KMinus2Extension => "k-minus-2-extension",
            Check::SevenCycle => "seven-cycle",
            Check::EightCycle => "eight-cycle",
            Check::FlowArithmetic => "flow-arithmetic",
            Check::CutStructure => "cut-structure",
            Check::RoundTrip => "round-trip",
            Check::KnownSets => "known-sets",
            Check::GirthFive => "girth-five",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub checked: u64,
    pub failed: u64,
}

/// A failed check with the graph and, where relevant, the precoloring.
#[derive(Debug, Clone)]
pub struct Mismatch {
    pub check: Check,
    pub graph: PlaneGraph,
    pub psi: Option<Coloring>,
    pub detail: String,
}

impl Mismatch {
    /// The graph file followed by the precoloring as `color` lines.
    pub fn report(&self) -> String {
        let mut out = format!("# mismatch {}: {}\n", self.check, self.detail);
        out.push_str(&self.graph.to_text());
        if let Some(psi) = &self.psi {
            out.push_str(&psi.restrict_to_outer(&self.graph).to_text());
        }
        out
    }
}

/// Aggregated results over a corpus.
#[derive(Debug, Clone, Default)]
pub struct Summary {
    pub graphs: u64,
    pub pairs: u64,
    pub extendable_pairs: u64,
    pub critical: u64,
    pub tallies: BTreeMap<Check, Tally>,
    /// Critical 8-cycle graphs per class letter.
    pub eight_classes: BTreeMap<String, u64>,
    /// Critical, non-extendable 7-cycle pairs per case.
    pub seven_cases: BTreeMap<SevenCycleCase, u64>,
    /// Face-length multisets realized by critical graphs, per outer length.
    pub realized_sets: BTreeMap<usize, BTreeSet<Vec<usize>>>,
    /// For critical graphs with a `(k-2)`-face: the shortest `f ∩ C` path seen,
    /// per outer length.
    pub k_minus_2_min_path: BTreeMap<usize, usize>,
    /// `(k-2)`-face graphs meeting (b) and (c) but whose `f ∩ C` path is
    /// shorter than `r(k)`, per outer length.
    pub k_minus_2_short_path: BTreeMap<usize, u64>,
    /// The first mismatches in corpus order.
    pub mismatches: Vec<Mismatch>,
}

/// Mismatches kept per summary.
pub const MAX_REPORTED: usize = 10;

impl Summary {
    pub fn tally(&self, check: Check) -> Tally {
        self.tallies.get(&check).copied().unwrap_or_default()
    }

    pub fn total_failures(&self) -> u64 {
        self.tallies.values().map(|t| t.failed).sum()
    }

    fn record(&mut self, check: Check, ok: bool) {
        let t = self.tallies.entry(check).or_default();
        t.checked += 1;
        if !ok {
            t.failed += 1;
        }
    }

    fn fail(&mut self, check: Check, g: &PlaneGraph, psi: Option<&Coloring>, detail: String) {
        self.record(check, false);
        if self.mismatches.len() < MAX_REPORTED {
            self.mismatches.push(Mismatch {
                check,
                graph: g.clone(),
                psi: psi.cloned(),
                detail,
            });
        }
    }

    fn check(
        &mut self,
        check: Check,
        ok: bool,
        g: &PlaneGraph,
        psi: Option<&Coloring>,
        detail: impl FnOnce() -> String,
    ) {
        if ok {
            self.record(check, true);
        } else {
            self.fail(check, g, psi, detail());
        }
    }

    /// Folds `other`, which covers later graphs, into `self`.
    pub fn merge(&mut self, other: Summary) {
        self.graphs += other.graphs;
        self.pairs += other.pairs;
        self.extendable_pairs += other.extendable_pairs;
        self.critical += other.critical;
        for (c, t) in other.tallies {
            let e = self.tallies.entry(c).or_default();
            e.checked += t.checked;
            e.failed += t.failed;
        }
        for (c, n) in other.eight_classes {
            *self.eight_classes.entry(c).or_default() += n;
        }
        for (c, n) in other.seven_cases {
            *self.seven_cases.entry(c).or_default() += n;
        }
        for (k, sets) in other.realized_sets {
            self.realized_sets.entry(k).or_default().extend(sets);
        }
        for (k, len) in other.k_minus_2_min_path {
            let e = self.k_minus_2_min_path.entry(k).or_insert(len);
            *e = (*e).min(len);
        }
        for (k, n) in other.k_minus_2_short_path {
            *self.k_minus_2_short_path.entry(k).or_default() += n;
        }
        let room = MAX_REPORTED.saturating_sub(self.mismatches.len());
        self.mismatches
            .extend(other.mismatches.into_iter().take(room));
    }

    /// Plain-text table, one row per check.
    pub fn table(&self) -> String {
        let mut out = format!(
            "graphs {}\npairs {}\nextendable {}\ncritical {}\n",
            self.graphs, self.pairs, self.extendable_pairs, self.critical
        );
        out.push_str(&format!(
            "{:<22} {:>12} {:>8}\n",
            "check", "checked", "failed"
        ));
        for c in Check::ALL {
            let t = self.tally(c);
            out.push_str(&format!(
                "{:<22} {:>12} {:>8}\n",
                c.name(),
                t.checked,
                t.failed
            ));
        }
        if !self.eight_classes.is_empty() {
            let parts: Vec<String> = self
                .eight_classes
                .iter()
                .map(|(c, n)| format!("{c}={n}"))
                .collect();
            out.push_str(&format!("eight-cycle classes {}\n", parts.join(" ")));
        }
        if !self.seven_cases.is_empty() {
            let parts: Vec<String> = self
                .seven_cases
                .iter()
                .map(|(c, n)| format!("{c}={n}"))
                .collect();
            out.push_str(&format!("seven-cycle cases {}\n", parts.join(" ")));
        }
        for (k, sets) in &self.realized_sets {
            let parts: Vec<String> = sets
                .iter()
                .map(|s| {
                    format!(
                        "{{{}}}",
                        s.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
                    )
                })
                .collect();
            out.push_str(&format!("realized k={k} {}\n", parts.join(" ")));
        }
        out.push_str(&format!("mismatches {}\n", self.total_failures()));
        out
    }
}

/// Every check that applies to a single graph.
pub fn check_graph(g: &PlaneGraph) -> Summary {
    let mut sum = Summary {
        graphs: 1,
        ..Summary::default()
    };
    let k = g.outer_cycle().len();
    let psis = enumerate_outer_colorings(g);
    let mut bad = Vec::new();
    for psi in &psis {
        sum.pairs += 1;
        let oracle = brute_force_extend(g, psi);
        let verdict = decide_extension(g, psi);
        sum.check(
            Check::OracleAgreement,
            verdict.extends() == oracle.is_some(),
            g,
            Some(psi),
            || format!("flow says {verdict}, oracle says {}", oracle.is_some()),
        );
        if let Some(phi) = &oracle {
            sum.extendable_pairs += 1;
            check_coloring(&mut sum, g, phi);
        } else {
            bad.push(psi.clone());
        }
        match &verdict {
            Verdict::Extends { witness, .. } => {
                let ok = witness.is_proper(g)
                    && g.outer_cycle()
                        .iter()
                        .all(|&v| witness.get(v) == psi.get(v));
                sum.check(Check::WitnessValid, ok, g, Some(psi), || {
                    "witness invalid".into()
                });
                check_coloring(&mut sum, g, witness);
            }
            Verdict::Imbalanced { .. } => {}
            Verdict::Blocked(cuts) => {
                for lc in cuts {
                    match &lc.structure {
                        Ok(st) => sum.check(
                            Check::CutStructure,
                            st.inequality_holds(),
                            g,
                            Some(psi),
                            || format!("inequality fails for {st:?}"),
                        ),
                        Err(e) => sum.fail(Check::CutStructure, g, Some(psi), e.to_string()),
                    }
                }
            }
        }
    }

    let crit = is_c_critical_given(g, &bad).is_critical;
    if crit {
        sum.critical += 1;
    }
    let s = g.face_length_multiset();

    if k <= 6 {
        let expected = k == 6 && s.is_empty() && g.separating_cycles_up_to(4).is_empty();
        sum.check(Check::SixCycle, crit == expected, g, None, || {
            format!("critical {crit}, characterization {expected}")
        });
        // the characterization speaks of colorings proper on G[V(C)], chords included
        let antipodal = |psi: &Coloring| {
            let c = |i: usize| psi.color(g.outer_cycle()[i]);
            k == 6 && c(0) == c(3) && c(1) == c(4) && c(2) == c(5)
        };
        let induced_bad: Vec<&Coloring> = bad.iter().filter(|psi| psi.is_proper(g)).collect();
        for psi in &induced_bad {
            sum.check(Check::SixCycle, antipodal(psi), g, Some(psi), || {
                "non-extendable but not antipodal".into()
            });
        }
        if crit {
            let expected = psis
                .iter()
                .filter(|psi| psi.is_proper(g) && antipodal(psi))
                .count();
            sum.check(
                Check::SixCycle,
                induced_bad.len() == expected,
                g,
                None,
                || {
                    format!(
                        "{} non-extendable colorings, {expected} antipodal",
                        induced_bad.len()
                    )
                },
            );
        }
    }

    if s.is_empty() && k >= 6 && k.is_multiple_of(2) {
        let expected = check_quadrangulation(g).expect("applicable");
        sum.check(Check::Quadrangulation, crit == expected, g, None, || {
            format!("critical {crit}, no separating 4-cycle {expected}")
        });
    }

    if k >= 7 && s == [k - 2] {
        let km2 = check_k_minus_2(g).expect("applicable");
        sum.check(
            Check::KMinus2Critical,
            crit == km2.is_critical(),
            g,
            None,
            || format!("critical {crit}, conditions {km2:?}"),
        );
        let path = g.outer_intersection_path_len(km2.face);
        if crit {
            if let Some(len) = path {
                let e = sum.k_minus_2_min_path.entry(k).or_insert(len);
                *e = (*e).min(len);
            }
        }
        if km2.b && km2.c && !km2.a {
            *sum.k_minus_2_short_path.entry(k).or_default() += 1;
        }
        if km2.is_critical() {
            for psi in &psis {
                let oracle = !bad.contains(psi);
                sum.check(
                    Check::KMinus2Extension,
                    km2.extends(g, psi) == oracle,
                    g,
                    Some(psi),
                    || format!("predicate {}, oracle {oracle}", km2.extends(g, psi)),
                );
            }
        }
    }

    if k == 7 {
        let configs = seven_cycle_configurations(g);
        for psi in &psis {
            let cases: BTreeSet<SevenCycleCase> = configs
                .iter()
                .filter(|m| m.colors_match(psi))
                .map(|m| m.case)
                .collect();
            let blocked = crit && bad.contains(psi);
            let ok = if blocked {
                cases.len() == 1
            } else {
                cases.is_empty()
            };
            sum.check(Check::SevenCycle, ok, g, Some(psi), || {
                format!("critical and non-extendable {blocked}, matched cases {cases:?}")
            });
            if blocked && ok {
                *sum.seven_cases
                    .entry(*cases.iter().next().unwrap())
                    .or_default() += 1;
            }
        }
    }

    if k == 8 {
        let class = classify_8cycle(g).expect("outer 8-cycle");
        let ok = class.is_critical() == crit && class.evidence_holds(g);
        sum.check(Check::EightCycle, ok, g, None, || {
            format!("critical {crit}, class {}", class.report(g).trim_end())
        });
        if crit && class.is_critical() {
            *sum.eight_classes
                .entry(class.letter().to_string())
                .or_default() += 1;
        }
    }

    if crit {
        sum.realized_sets.entry(k).or_default().insert(s.clone());
        if let Some(known) = known_critical_sets(4, k) {
            sum.check(Check::KnownSets, known.sets.contains(&s), g, None, || {
                format!("S(G) = {s:?} not among {:?}", known.sets)
            });
        }
    }

    if g.girth() >= 5 {
        let chord = k == 8 && g.vertex_count() == 8 && g.edge_count() == 9;
        sum.check(Check::GirthFive, crit == chord, g, None, || {
            format!("critical {crit}, 8-cycle with chord {chord}")
        });
        if crit {
            if let Some(known) = known_critical_sets(5, k) {
                sum.check(Check::KnownSets, known.sets.contains(&s), g, None, || {
                    format!("girth 5: S(G) = {s:?} not among {:?}", known.sets)
                });
            }
        }
    }
    sum
}

/// Flow arithmetic and round trip for one total coloring.
fn check_coloring(sum: &mut Summary, g: &PlaneGraph, phi: &Coloring) {
    let o = orient_dual(g, phi);
    let arithmetic = g.internal_faces().all(|f| {
        let d = o.delta(g, f);
        let len = g.face_len(f) as i32;
        let generic = d % 3 == 0 && d.abs() <= len && (d - len) % 2 == 0;
        generic
            && match len {
                4 => d == 0,
                5 | 7 => d.abs() == 3,
                6 | 8 => d == 0 || d.abs() == 6,
                _ => true,
            }
    });
    sum.check(Check::FlowArithmetic, arithmetic, g, None, || {
        format!("coloring {phi}")
    });
    let seed = g.outer_cycle()[0];
    let back = coloring_from_orientation(g, &o, (seed, phi.color(seed)));
    sum.check(
        Check::RoundTrip,
        back.as_ref().ok() == Some(phi),
        g,
        None,
        || format!("coloring {phi} came back as {back:?}"),
    );
}

/// Runs [`check_graph`] over every filling of `spec`, in batches spread over
/// the current rayon pool. The result does not depend on the pool size.
pub fn run_corpus(spec: &GenSpec) -> Summary {
    const BATCH: usize = 2048;
    let mut total = Summary::default();
    let mut batch = Vec::with_capacity(BATCH);
    let flush = |batch: &mut Vec<PlaneGraph>, total: &mut Summary| {
        let parts: Vec<Summary> = batch.par_iter().map(check_graph).collect();
        for p in parts {
            total.merge(p);
        }
        batch.clear();
    };
    for_each_filling(spec, |g| {
        batch.push(g);
        if batch.len() == BATCH {
            flush(&mut batch, &mut total);
        }
    });
    flush(&mut batch, &mut total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::fixtures;

    #[test]
    fn fixtures_pass_every_check() {
        for (name, g) in fixtures() {
            let s = check_graph(&g);
            assert_eq!(s.total_failures(), 0, "{name}: {:?}", s.mismatches);
            assert_eq!(s.critical, 1, "{name}");
        }
    }

    #[test]
    fn small_corpus_is_consistent() {
        let s = run_corpus(&GenSpec::new(6, 2, 4).unwrap());
        assert_eq!(s.total_failures(), 0, "{:?}", s.mismatches);
        assert!(s.tally(Check::OracleAgreement).checked > 0);
        assert!(s.critical > 0);
    }

    #[test]
    fn merge_keeps_counts() {
        let mut a = check_graph(&fixtures()[0].1);
        let b = check_graph(&fixtures()[1].1);
        let pairs = a.pairs + b.pairs;
        a.merge(b);
        assert_eq!(a.graphs, 2);
        assert_eq!(a.pairs, pairs);
        assert!(a.table().ends_with("mismatches 0\n"));
    }
}
