//! C-criticality by brute force, and the structural characterizations for
//! outer cycles of length at most eight.
//!
//! A proper subgraph containing `C` either misses an edge outside `C` or only
//! isolated vertices, which never affect colorability, so it suffices to try
//! every single edge deletion.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::coloring_flow::{
    backtrack, brute_force_extend, classify_boundary_edges, enumerate_outer_colorings,
    extension_order, Coloring, EdgeKind,
};
use crate::extension_solver::decide_extension_fast;
use crate::plane_graph::{FaceId, PlaneGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriticalityError {
    #[error("classifier does not apply: {0}")]
    NotApplicable(String),
}

fn not_applicable<T>(msg: impl Into<String>) -> Result<T, CriticalityError> {
    Err(CriticalityError::NotApplicable(msg.into()))
}

#[derive(Debug, Clone)]
pub struct CriticalityVerdict {
    pub is_critical: bool,
    /// For each edge outside `C`, a precoloring extending to `G - e` but not
    /// to `G`. Filled only for critical graphs.
    pub witnesses: Vec<(usize, Coloring)>,
    /// An edge whose deletion does not change the extendable precolorings.
    pub failure_edge: Option<usize>,
    pub reason: Option<String>,
}

impl CriticalityVerdict {
    pub fn report(&self, g: &PlaneGraph) -> String {
        let mut out = format!("critical {}\n", if self.is_critical { "yes" } else { "no" });
        for (e, psi) in &self.witnesses {
            let (u, v) = g.endpoints(*e);
            out.push_str(&format!(
                "witness edge {}-{} coloring {}\n",
                u + 1,
                v + 1,
                join(&psi.outer_colors(g))
            ));
        }
        if let Some(e) = self.failure_edge {
            let (u, v) = g.endpoints(e);
            out.push_str(&format!("failure edge {}-{}\n", u + 1, v + 1));
        }
        if let Some(r) = &self.reason {
            out.push_str(&format!("reason {r}\n"));
        }
        out
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn adjacency(g: &PlaneGraph) -> Vec<Vec<usize>> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).to_vec())
        .collect()
}

/// Whether `psi` extends to `G - e`.
pub fn extends_without_edge(g: &PlaneGraph, psi: &Coloring, e: usize) -> bool {
    let (a, b) = g.endpoints(e);
    let mut adj = adjacency(g);
    adj[a].retain(|&x| x != b);
    adj[b].retain(|&x| x != a);
    let mut colors = vec![0u8; g.vertex_count()];
    for &v in g.outer_cycle() {
        colors[v] = psi.color(v);
    }
    for v in 0..g.vertex_count() {
        if colors[v] != 0 && adj[v].iter().any(|&u| colors[u] == colors[v]) {
            return false;
        }
    }
    backtrack(&adj, &extension_order(g), &mut colors)
}

/// Canonical precolorings of `C` that do not extend, by the brute-force
/// oracle.
pub fn nonextendable_by_oracle(g: &PlaneGraph) -> Vec<Coloring> {
    enumerate_outer_colorings(g)
        .into_iter()
        .filter(|psi| brute_force_extend(g, psi).is_none())
        .collect()
}

/// Canonical precolorings of `C` that do not extend, by the flow solver.
pub fn nonextendable_colorings(g: &PlaneGraph) -> Vec<Coloring> {
    enumerate_outer_colorings(g)
        .into_iter()
        .filter(|psi| !decide_extension_fast(g, psi).extends())
        .collect()
}

/// Decides C-criticality with the brute-force oracle.
pub fn is_c_critical(g: &PlaneGraph) -> CriticalityVerdict {
    is_c_critical_given(g, &nonextendable_by_oracle(g))
}

/// As [`is_c_critical`], with the canonical non-extendable precolorings
/// already known.
pub fn is_c_critical_given(g: &PlaneGraph, bad: &[Coloring]) -> CriticalityVerdict {
    let inner: Vec<usize> = (0..g.edge_count())
        .filter(|&e| !g.is_outer_edge(e))
        .collect();
    if inner.is_empty() {
        return CriticalityVerdict {
            is_critical: false,
            witnesses: Vec::new(),
            failure_edge: None,
            reason: Some("graph is its outer cycle".into()),
        };
    }
    let mut witnesses = Vec::with_capacity(inner.len());
    for &e in &inner {
        match bad.iter().find(|psi| extends_without_edge(g, psi, e)) {
            Some(psi) => witnesses.push((e, psi.clone())),
            None => {
                return CriticalityVerdict {
                    is_critical: false,
                    witnesses: Vec::new(),
                    failure_edge: Some(e),
                    reason: Some(if bad.is_empty() {
                        "every precoloring extends".into()
                    } else {
                        "deleting the edge keeps every non-extendable precoloring blocked".into()
                    }),
                };
            }
        }
    }
    CriticalityVerdict {
        is_critical: true,
        witnesses,
        failure_edge: None,
        reason: None,
    }
}

/// `r(k)`: 0, 2, 1 for `k ≡ 0, 1, 2 (mod 3)`.
pub fn r_of(k: usize) -> usize {
    match k % 3 {
        0 => 0,
        1 => 2,
        _ => 1,
    }
}

/// Criticality of a quadrangulation of the disk: no separating 4-cycle.
pub fn check_quadrangulation(g: &PlaneGraph) -> Result<bool, CriticalityError> {
    let k = g.outer_cycle().len();
    if k < 6 || k % 2 == 1 {
        return not_applicable(format!("outer cycle of length {k}"));
    }
    if !g.face_length_multiset().is_empty() {
        return not_applicable("an internal face is longer than four");
    }
    Ok(g.separating_cycles_up_to(4).is_empty())
}

/// The three conditions for a graph whose only long internal face has length
/// `k - 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KMinus2 {
    pub face: FaceId,
    /// `f ∩ C` is a path of length at least `r(k)`.
    pub a: bool,
    /// No separating 4-cycle.
    pub b: bool,
    /// No cycle of length below `k` other than `f` encloses `f`.
    pub c: bool,
}

impl KMinus2 {
    pub fn is_critical(&self) -> bool {
        self.a && self.b && self.c
    }

    /// Extension criterion: `E(C) \ E(f)` holds both a source and a sink edge.
    pub fn extends(&self, g: &PlaneGraph, psi: &Coloring) -> bool {
        let class = classify_boundary_edges(g, psi);
        let on_face: BTreeSet<usize> = g
            .face(self.face)
            .boundary
            .iter()
            .map(|d| d.edge())
            .collect();
        let kinds: BTreeSet<EdgeKind> = g
            .outer_darts()
            .iter()
            .zip(&class.kinds)
            .filter(|(d, _)| !on_face.contains(&d.edge()))
            .map(|(_, &k)| k)
            .collect();
        kinds.len() == 2
    }
}

pub fn check_k_minus_2(g: &PlaneGraph) -> Result<KMinus2, CriticalityError> {
    let k = g.outer_cycle().len();
    if k < 7 {
        return not_applicable(format!("outer cycle of length {k}"));
    }
    if g.face_length_multiset() != [k - 2] {
        return not_applicable("internal faces are not one (k-2)-face and 4-faces");
    }
    let face = g
        .internal_faces()
        .find(|&f| g.face_len(f) == k - 2)
        .expect("the long face exists");
    let a = match g.outer_intersection_path_len(face) {
        Some(len) => len >= r_of(k),
        None => r_of(k) == 0 && g.outer_intersection(face).0.is_empty(),
    };
    let b = g.separating_cycles_up_to(4).is_empty();
    let c = g.cycles_up_to(k - 1).iter().all(|cyc| {
        let inside = g.faces_inside(cyc).expect("enumerated cycles are cycles");
        let facial = inside.len() == 1 && g.face_len(inside[0]) == cyc.len();
        facial || !inside.contains(&face)
    });
    Ok(KMinus2 { face, a, b, c })
}

/// Outer vertices relabelled as `c_1 .. c_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    /// `c[i]` is the vertex labelled `c_{i+1}`.
    pub c: Vec<usize>,
    pub clockwise: bool,
}

/// All `2k` rotations and reflections of the outer cycle.
pub fn outer_labelings(g: &PlaneGraph) -> Vec<Labeling> {
    let outer = g.outer_cycle();
    let k = outer.len();
    let mut out = Vec::with_capacity(2 * k);
    for clockwise in [true, false] {
        for start in 0..k {
            let c = (0..k)
                .map(|i| {
                    let j = if clockwise { start + i } else { start + k - i };
                    outer[j % k]
                })
                .collect();
            out.push(Labeling { c, clockwise });
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SevenCycleCase {
    A,
    B,
    C,
}

impl fmt::Display for SevenCycleCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SevenCycleCase::A => "a",
            SevenCycleCase::B => "b",
            SevenCycleCase::C => "c",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SevenCycleMatch {
    pub case: SevenCycleCase,
    pub labeling: Labeling,
    /// `v` for case (b); `u, v` for case (c).
    pub inner: Vec<usize>,
}

fn all_faces_inside_are_quads(g: &PlaneGraph, cycle: &[usize]) -> bool {
    g.faces_inside(cycle)
        .map(|fs| fs.iter().all(|&f| g.face_len(f) == 4))
        .unwrap_or(false)
}

fn bounds_face(g: &PlaneGraph, cycle: &[usize]) -> bool {
    g.is_facial(cycle).unwrap_or(false)
}

impl SevenCycleMatch {
    /// The color equalities the configuration demands of a non-extendable
    /// precoloring.
    pub fn colors_match(&self, psi: &Coloring) -> bool {
        let c = &self.labeling.c;
        let p = |i: usize| psi.color(c[i - 1]);
        match self.case {
            SevenCycleCase::A => p(1) == p(5),
            SevenCycleCase::B => p(4) == p(7) && p(5) == p(1),
            SevenCycleCase::C => p(3) == p(6) && p(2) == p(4) && p(4) == p(7) && p(1) == p(5),
        }
    }
}

/// Structural part of the 7-cycle configurations, over all relabellings of
/// `C`; color conditions are not checked.
pub fn seven_cycle_configurations(g: &PlaneGraph) -> Vec<SevenCycleMatch> {
    let mut out = Vec::new();
    if g.outer_cycle().len() != 7 || !g.separating_cycles_up_to(5).is_empty() {
        return out;
    }
    for lab in outer_labelings(g) {
        let c = &lab.c;
        // (a): C plus the chord c1c5
        if g.vertex_count() == 7 && g.edge_count() == 8 && g.has_edge(c[0], c[4]) {
            out.push(SevenCycleMatch {
                case: SevenCycleCase::A,
                labeling: lab.clone(),
                inner: Vec::new(),
            });
        }
        // (b): v adjacent to c1 and c4
        for &v in g.neighbors(c[0]) {
            if g.is_outer_vertex(v) || !g.has_edge(v, c[3]) {
                continue;
            }
            if bounds_face(g, &[c[0], c[1], c[2], c[3], v])
                && all_faces_inside_are_quads(g, &[v, c[3], c[4], c[5], c[6], c[0]])
            {
                out.push(SevenCycleMatch {
                    case: SevenCycleCase::B,
                    labeling: lab.clone(),
                    inner: vec![v],
                });
            }
        }
        // (c): path c1 u v c3 through two inner vertices
        for &u in g.neighbors(c[0]) {
            if g.is_outer_vertex(u) {
                continue;
            }
            for &v in g.neighbors(u) {
                if g.is_outer_vertex(v) || !g.has_edge(v, c[2]) {
                    continue;
                }
                if bounds_face(g, &[c[0], c[1], c[2], v, u])
                    && all_faces_inside_are_quads(g, &[u, v, c[2], c[3], c[4], c[5], c[6], c[0]])
                {
                    out.push(SevenCycleMatch {
                        case: SevenCycleCase::C,
                        labeling: lab.clone(),
                        inner: vec![u, v],
                    });
                }
            }
        }
    }
    out
}

/// Every way the pair `(G, ψ)` fits one of the three 7-cycle
/// configurations, including the color equalities.
pub fn seven_cycle_matches(g: &PlaneGraph, psi: &Coloring) -> Vec<SevenCycleMatch> {
    seven_cycle_configurations(g)
        .into_iter()
        .filter(|m| m.colors_match(psi))
        .collect()
}

/// The configuration matched by a critical graph with a non-extendable
/// precoloring of its 7-cycle, if any.
pub fn classify_7cycle(g: &PlaneGraph, psi: &Coloring) -> Option<SevenCycleMatch> {
    seven_cycle_matches(g, psi)
        .into_iter()
        .min_by_key(|m| m.case)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EightCycleClass {
    NotCritical {
        reason: String,
    },
    /// Every internal face has length four.
    CaseA,
    /// One 6-face meeting `C` in a path of the given length.
    CaseB {
        face: FaceId,
        path_len: usize,
    },
    /// Two 5-faces, each meeting `C` in a path of length at least two.
    CaseC {
        faces: [(FaceId, usize); 2],
    },
    /// Two 5-faces in the labelled configuration
    /// `f1 = c1 v1 z v2 v3`, `f2 = z w1 c5 w2 w3`.
    CaseD {
        f1: FaceId,
        f2: FaceId,
        labeling: Labeling,
        f1_walk: Vec<usize>,
        f2_walk: Vec<usize>,
    },
}

impl EightCycleClass {
    pub fn letter(&self) -> &'static str {
        match self {
            EightCycleClass::NotCritical { .. } => "NOT_CRITICAL",
            EightCycleClass::CaseA => "A",
            EightCycleClass::CaseB { .. } => "B",
            EightCycleClass::CaseC { .. } => "C",
            EightCycleClass::CaseD { .. } => "D",
        }
    }

    pub fn is_critical(&self) -> bool {
        !matches!(self, EightCycleClass::NotCritical { .. })
    }

    /// Re-checks the recorded evidence against the face structure of `g`.
    pub fn evidence_holds(&self, g: &PlaneGraph) -> bool {
        let s = g.face_length_multiset();
        match self {
            EightCycleClass::NotCritical { .. } => true,
            EightCycleClass::CaseA => s.is_empty(),
            EightCycleClass::CaseB { face, path_len } => {
                s == [6]
                    && g.face_len(*face) == 6
                    && *path_len >= 1
                    && g.outer_intersection_path_len(*face) == Some(*path_len)
            }
            EightCycleClass::CaseC { faces } => {
                s == [5, 5]
                    && faces[0].0 != faces[1].0
                    && faces.iter().all(|&(f, len)| {
                        g.face_len(f) == 5
                            && len >= 2
                            && g.outer_intersection_path_len(f) == Some(len)
                    })
            }
            EightCycleClass::CaseD {
                f1,
                f2,
                labeling,
                f1_walk,
                f2_walk,
            } => {
                let valid_label = outer_labelings(g).contains(labeling);
                let walk_ok = |f: FaceId, walk: &[usize]| {
                    g.face_len(f) == 5
                        && face_walk_from(g, f, walk[0], labeling.clockwise).as_deref()
                            == Some(walk)
                };
                s == [5, 5]
                    && f1 != f2
                    && valid_label
                    && walk_ok(*f1, f1_walk)
                    && walk_ok(*f2, f2_walk)
                    && f1_walk[0] == labeling.c[0]
                    && f1_walk[2] == f2_walk[0]
                    && f2_walk[2] == labeling.c[4]
            }
        }
    }

    pub fn report(&self, g: &PlaneGraph) -> String {
        let names = |vs: &[usize]| {
            vs.iter()
                .map(|v| (v + 1).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut out = format!("class {}\n", self.letter());
        match self {
            EightCycleClass::NotCritical { reason } => out.push_str(&format!("reason {reason}\n")),
            EightCycleClass::CaseA => out.push_str("faces all 4\n"),
            EightCycleClass::CaseB { face, path_len } => out.push_str(&format!(
                "face {face} length 6 vertices {} outer-path {path_len}\n",
                names(&g.face_vertices(*face))
            )),
            EightCycleClass::CaseC { faces } => {
                for (f, len) in faces {
                    out.push_str(&format!(
                        "face {f} length 5 vertices {} outer-path {len}\n",
                        names(&g.face_vertices(*f))
                    ));
                }
            }
            EightCycleClass::CaseD {
                f1,
                f2,
                labeling,
                f1_walk,
                f2_walk,
            } => {
                out.push_str(&format!(
                    "labeling c1..c8 = {} ({})\n",
                    names(&labeling.c),
                    if labeling.clockwise {
                        "clockwise"
                    } else {
                        "counterclockwise"
                    }
                ));
                out.push_str(&format!("f1 {f1} = {}\n", names(f1_walk)));
                out.push_str(&format!("f2 {f2} = {}\n", names(f2_walk)));
                out.push_str(&format!("z {}\n", f1_walk[2] + 1));
            }
        }
        out
    }
}

/// The boundary of `f` as a vertex walk starting at `start`, in clockwise
/// order when `clockwise` holds (faces are traced counterclockwise).
fn face_walk_from(g: &PlaneGraph, f: FaceId, start: usize, clockwise: bool) -> Option<Vec<usize>> {
    let mut vs = g.face_vertices(f);
    if clockwise {
        vs.reverse();
    }
    let i = vs.iter().position(|&v| v == start)?;
    vs.rotate_left(i);
    Some(vs)
}

fn case_d(g: &PlaneGraph, fives: [FaceId; 2]) -> Option<EightCycleClass> {
    for lab in outer_labelings(g) {
        let (c1, c5) = (lab.c[0], lab.c[4]);
        for (f1, f2) in [(fives[0], fives[1]), (fives[1], fives[0])] {
            let Some(w1) = face_walk_from(g, f1, c1, lab.clockwise) else {
                continue;
            };
            let z = w1[2];
            let Some(w2) = face_walk_from(g, f2, z, lab.clockwise) else {
                continue;
            };
            if w2[2] == c5 {
                return Some(EightCycleClass::CaseD {
                    f1,
                    f2,
                    labeling: lab,
                    f1_walk: w1,
                    f2_walk: w2,
                });
            }
        }
    }
    None
}

/// Structural classification of a graph with an outer 8-cycle.
pub fn classify_8cycle(g: &PlaneGraph) -> Result<EightCycleClass, CriticalityError> {
    if g.outer_cycle().len() != 8 {
        return not_applicable(format!("outer cycle of length {}", g.outer_cycle().len()));
    }
    let not = |reason: &str| {
        Ok(EightCycleClass::NotCritical {
            reason: reason.into(),
        })
    };
    if !g.separating_cycles_up_to(5).is_empty() {
        return not("separating cycle of length at most five");
    }
    let bad_six = g
        .cycles_up_to(6)
        .into_iter()
        .filter(|c| c.len() == 6)
        .any(|c| {
            let inside = g.faces_inside(&c).expect("enumerated cycles are cycles");
            let facial = inside.len() == 1 && g.face_len(inside[0]) == 6;
            !facial && inside.iter().any(|&f| g.face_len(f) != 4)
        });
    if bad_six {
        return not("non-facial 6-cycle encloses a face longer than four");
    }
    let long: Vec<FaceId> = g.internal_faces().filter(|&f| g.face_len(f) >= 5).collect();
    let s = g.face_length_multiset();
    match s.as_slice() {
        [] => Ok(EightCycleClass::CaseA),
        [6] => match g.outer_intersection_path_len(long[0]) {
            Some(len) if len >= 1 => Ok(EightCycleClass::CaseB {
                face: long[0],
                path_len: len,
            }),
            _ => not("6-face does not meet the outer cycle in a path of length at least one"),
        },
        [5, 5] => {
            let lens = [
                g.outer_intersection_path_len(long[0]),
                g.outer_intersection_path_len(long[1]),
            ];
            if lens.iter().all(|l| l.is_some_and(|l| l >= 2)) {
                return Ok(EightCycleClass::CaseC {
                    faces: [(long[0], lens[0].unwrap()), (long[1], lens[1].unwrap())],
                });
            }
            match case_d(g, [long[0], long[1]]) {
                Some(d) => Ok(d),
                None => not("5-faces match neither configuration"),
            }
        }
        _ => not("long faces are not one of {}, {6}, {5,5}"),
    }
}

/// Known face-length sets of critical graphs: `(girth, k) -> multisets`.
/// `exact` is false where only an upper bound is known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnownCriticalSets {
    pub girth: usize,
    pub k: usize,
    pub sets: Vec<Vec<usize>>,
    pub exact: bool,
}

pub fn known_critical_sets(girth: usize, k: usize) -> Option<KnownCriticalSets> {
    let (sets, exact) = match (girth, k) {
        (4, 4..=5) => (vec![], true),
        (4, 6) => (vec![vec![]], true),
        (4, 7) => (vec![vec![5]], false),
        (4, 8) => (vec![vec![], vec![5, 5], vec![6]], false),
        (5, 4..=7) => (vec![], true),
        (5, 8) => (vec![vec![5, 5]], true),
        _ => return None,
    };
    Some(KnownCriticalSets {
        girth,
        k,
        sets,
        exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::fixtures;

    fn fixture(name: &str) -> PlaneGraph {
        fixtures().into_iter().find(|(n, _)| *n == name).unwrap().1
    }

    fn psi(g: &PlaneGraph, cs: &[u8]) -> Coloring {
        Coloring::from_outer(g, cs).unwrap()
    }

    #[test]
    fn r_values() {
        assert_eq!(r_of(9), 0);
        assert_eq!(r_of(7), 2);
        assert_eq!(r_of(8), 1);
        assert_eq!(r_of(6), 0);
    }

    #[test]
    fn fixtures_critical() {
        for name in [
            "HEX_QUAD",
            "C8_CHORD",
            "F3_CASE_B",
            "F4_CASE_C",
            "C7_CASE_A",
            "C7_CASE_B",
            "C7_CASE_C",
            "C8_CASE_D",
        ] {
            let g = fixture(name);
            let v = is_c_critical(&g);
            assert!(v.is_critical, "{name}");
            assert_eq!(v.witnesses.len(), g.edge_count() - g.outer_cycle().len());
            for (e, p) in &v.witnesses {
                assert!(brute_force_extend(&g, p).is_none());
                assert!(extends_without_edge(&g, p, *e));
            }
        }
    }

    #[test]
    fn plain_cycle_is_not_critical() {
        let g = PlaneGraph::new(
            (0..6).map(|i| vec![(i + 5) % 6, (i + 1) % 6]).collect(),
            (0..6).collect(),
        )
        .unwrap();
        let v = is_c_critical(&g);
        assert!(!v.is_critical);
        assert!(v.reason.is_some());
    }

    #[test]
    fn separating_four_cycle_is_not_critical() {
        // Hexagon with centre v on c1, c3, c5, and the 4-face c1 c2 c3 v
        // filled with a vertex w joined to c2 and v.
        let g = fixture("HEX_QUAD");
        let mut pts: Vec<(f64, f64)> = (0..6)
            .map(|i| {
                let a = std::f64::consts::FRAC_PI_2 - std::f64::consts::PI * i as f64 / 3.0;
                (a.cos(), a.sin())
            })
            .collect();
        pts.push((0.0, 0.0));
        pts.push((0.45, 0.25));
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend([(6, 0), (6, 2), (6, 4), (7, 1), (7, 6)]);
        let h = PlaneGraph::from_drawing(&pts, &edges, &(0..6).collect::<Vec<_>>()).unwrap();
        assert_eq!(h.separating_cycles_up_to(4).len(), 1);
        let v = is_c_critical(&h);
        assert!(!v.is_critical);
        assert!(v.failure_edge.is_some());
        assert_eq!(check_quadrangulation(&h), Ok(false));
        assert_eq!(check_quadrangulation(&g), Ok(true));
    }

    #[test]
    fn hex_quad_nonextendable_are_antipodal() {
        let g = fixture("HEX_QUAD");
        let bad = nonextendable_colorings(&g);
        let expected: Vec<Vec<u8>> = enumerate_outer_colorings(&g)
            .iter()
            .map(|p| p.outer_colors(&g))
            .filter(|c| c[0] == c[3] && c[1] == c[4] && c[2] == c[5])
            .collect();
        assert_eq!(
            bad.iter().map(|p| p.outer_colors(&g)).collect::<Vec<_>>(),
            expected
        );
    }

    #[test]
    fn chord_nonextendable_have_equal_ends() {
        let g = fixture("C8_CHORD");
        for p in enumerate_outer_colorings(&g) {
            let bad = nonextendable_colorings(&g).contains(&p);
            assert_eq!(bad, p.color(0) == p.color(4));
        }
    }

    #[test]
    fn seven_cycle_with_chord() {
        let g = fixture("C7_CASE_A");
        let km2 = check_k_minus_2(&g).unwrap();
        assert!(km2.a && km2.b && km2.c);
        let bad = psi(&g, &[1, 2, 1, 2, 1, 2, 3]);
        assert!(!km2.extends(&g, &bad));
        assert!(brute_force_extend(&g, &bad).is_none());
        assert_eq!(classify_7cycle(&g, &bad).unwrap().case, SevenCycleCase::A);
        let good = psi(&g, &[1, 2, 1, 2, 3, 2, 3]);
        assert!(km2.extends(&g, &good));
        assert!(classify_7cycle(&g, &good).is_none());
    }

    #[test]
    fn seven_cycle_case_b() {
        let g = fixture("C7_CASE_B");
        let km2 = check_k_minus_2(&g).unwrap();
        assert!(km2.is_critical());
        for p in enumerate_outer_colorings(&g) {
            let ext = brute_force_extend(&g, &p).is_some();
            assert_eq!(km2.extends(&g, &p), ext);
            let m = seven_cycle_matches(&g, &p);
            assert_eq!(m.is_empty(), ext);
            if !ext {
                assert!(m.iter().all(|m| m.case == SevenCycleCase::B));
            }
        }
    }

    #[test]
    fn seven_cycle_case_c() {
        let g = fixture("C7_CASE_C");
        let bad = nonextendable_by_oracle(&g);
        assert!(!bad.is_empty());
        for p in &bad {
            let m = seven_cycle_matches(&g, p);
            assert!(!m.is_empty());
            assert!(m.iter().all(|m| m.case == SevenCycleCase::C));
        }
    }

    #[test]
    fn eight_cycle_fixtures() {
        assert!(matches!(
            classify_8cycle(&fixture("C8_CHORD")),
            Ok(EightCycleClass::CaseC { .. })
        ));
        assert!(matches!(
            classify_8cycle(&fixture("F3_CASE_B")),
            Ok(EightCycleClass::CaseB { path_len: 4, .. })
        ));
        assert!(matches!(
            classify_8cycle(&fixture("F4_CASE_C")),
            Ok(EightCycleClass::CaseC { .. })
        ));
        let d = fixture("C8_CASE_D");
        assert!(matches!(
            classify_8cycle(&d),
            Ok(EightCycleClass::CaseD { .. })
        ));
        assert!(is_c_critical(&d).is_critical);
        assert!(classify_8cycle(&fixture("HEX_QUAD")).is_err());
    }

    #[test]
    fn known_sets_table() {
        assert_eq!(
            known_critical_sets(4, 6).unwrap().sets,
            vec![Vec::<usize>::new()]
        );
        assert!(known_critical_sets(4, 5).unwrap().sets.is_empty());
        assert_eq!(known_critical_sets(5, 8).unwrap().sets, vec![vec![5, 5]]);
        assert!(!known_critical_sets(4, 8).unwrap().exact);
        assert!(known_critical_sets(4, 9).is_none());
    }
}
