//! Exhaustive generation of small 2-connected triangle-free plane graphs with
//! a fixed outer cycle, and named fixtures.
//!
//! Every 2-connected plane graph containing the outer cycle `C` is obtained
//! from `C` by repeatedly adding a path inside a face between two of its
//! boundary vertices. Graphs are deduplicated by a canonical code that is
//! invariant under rotations and reflections of `C`.

use std::collections::HashSet;

use thiserror::Error;

use crate::plane_graph::{Dart, PlaneGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub k: usize,
    pub max_internal_vertices: usize,
    /// Upper bound on the number of internal faces, if any.
    pub max_faces: Option<usize>,
    pub girth_floor: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenSpecError {
    #[error("outer length {0} outside 4..=8")]
    OuterLength(usize),
    #[error("girth floor {0} must be 4 or 5")]
    Girth(usize),
}

impl GenSpec {
    pub fn new(
        k: usize,
        max_internal_vertices: usize,
        girth_floor: usize,
    ) -> Result<Self, GenSpecError> {
        let spec = GenSpec {
            k,
            max_internal_vertices,
            max_faces: None,
            girth_floor,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), GenSpecError> {
        if !(4..=8).contains(&self.k) {
            return Err(GenSpecError::OuterLength(self.k));
        }
        if !(4..=5).contains(&self.girth_floor) {
            return Err(GenSpecError::Girth(self.girth_floor));
        }
        Ok(())
    }
}

/// The plain cycle on `0..k` with clockwise outer order.
pub fn cycle_graph(k: usize) -> PlaneGraph {
    let rotation = (0..k).map(|i| vec![(i + k - 1) % k, (i + 1) % k]).collect();
    PlaneGraph::new(rotation, (0..k).collect()).expect("a cycle of length at least 4 is valid")
}

/// Canonical code of the embedding up to rotations and reflections of the
/// outer cycle: the smallest rooted code over all `2k` outer roots.
pub fn canonical_code(rotation: &[Vec<usize>], outer: &[usize]) -> Vec<u16> {
    let mut best: Option<Vec<u16>> = None;
    let mut buf = Vec::new();
    for mirror in [false, true] {
        for start in 0..outer.len() {
            if rooted_code(rotation, outer, start, mirror, best.as_deref(), &mut buf) {
                best = Some(buf.clone());
            }
        }
    }
    best.expect("outer cycle is non-empty")
}

/// Writes the code rooted at `outer[start]` into `out` and returns whether
/// it is smaller than `bound`, stopping early once it cannot be.
///
/// Outer vertices get labels `0..k` from `outer[start]` (backwards when
/// `mirror`); the rest are labelled in order of discovery while scanning
/// rotations (counterclockwise when `mirror`) from each vertex's reference
/// neighbour. The code lists every vertex's neighbour labels in that order,
/// each row closed by `u16::MAX`.
fn rooted_code(
    rotation: &[Vec<usize>],
    outer: &[usize],
    start: usize,
    mirror: bool,
    bound: Option<&[u16]>,
    out: &mut Vec<u16>,
) -> bool {
    const NONE: usize = usize::MAX;
    let n = rotation.len();
    let k = outer.len();
    let mut label = vec![NONE; n];
    let mut order = Vec::with_capacity(n);
    let mut reference = vec![NONE; n];
    let step = |j: usize| {
        if mirror {
            (start + k - j % k) % k
        } else {
            (start + j) % k
        }
    };
    for j in 0..k {
        let v = outer[step(j)];
        label[v] = j;
        order.push(v);
        reference[v] = outer[step(j + 1)];
    }
    out.clear();
    // Equal to the bound so far; once smaller, no more comparisons.
    let mut tied = bound.is_some();
    let mut push = |x: u16, out: &mut Vec<u16>| -> bool {
        if tied {
            let b = bound.unwrap()[out.len()];
            if x > b {
                return false;
            }
            if x < b {
                tied = false;
            }
        }
        out.push(x);
        true
    };
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        let nbrs = &rotation[v];
        let d = nbrs.len();
        let r = nbrs
            .iter()
            .position(|&u| u == reference[v])
            .expect("reference is a neighbour");
        for j in 0..d {
            let u = if mirror {
                nbrs[(r + d - j) % d]
            } else {
                nbrs[(r + j) % d]
            };
            if label[u] == NONE {
                label[u] = order.len();
                order.push(u);
                reference[u] = v;
            }
            if !push(label[u] as u16, out) {
                return false;
            }
        }
        if !push(u16::MAX, out) {
            return false;
        }
        i += 1;
    }
    !tied
}

/// Rebuilds the canonically labelled graph from its code.
pub fn graph_from_code(code: &[u16], k: usize) -> PlaneGraph {
    let rotation: Vec<Vec<usize>> = code
        .split(|&x| x == u16::MAX)
        .filter(|row| !row.is_empty())
        .map(|row| row.iter().map(|&x| x as usize).collect())
        .collect();
    PlaneGraph::new(rotation, (0..k).collect()).expect("codes describe valid graphs")
}

/// Relabels `g` canonically: outer cycle `0..k` clockwise.
pub fn canonicalize(g: &PlaneGraph) -> (Vec<u16>, PlaneGraph) {
    let code = canonical_code(g.rotations(), g.outer_cycle());
    let h = graph_from_code(&code, g.outer_cycle().len());
    (code, h)
}

/// Rotation system after adding a path of `len` edges inside the face whose
/// corners at `a` and `b` follow the darts `into_a` and `into_b`.
fn split_face(g: &PlaneGraph, into_a: Dart, into_b: Dart, len: usize) -> Vec<Vec<usize>> {
    let mut rotation: Vec<Vec<usize>> = g.rotations().to_vec();
    let n = rotation.len();
    let a = g.head(into_a);
    let b = g.head(into_b);
    let path: Vec<usize> = std::iter::once(a)
        .chain(n..n + len - 1)
        .chain(std::iter::once(b))
        .collect();
    for i in 1..len {
        rotation.push(vec![path[i - 1], path[i + 1]]);
    }
    // The face occupies the sector clockwise after the incoming neighbour.
    for (v, from, to) in [
        (a, g.tail(into_a), path[1]),
        (b, g.tail(into_b), path[len - 1]),
    ] {
        let pos = rotation[v].iter().position(|&u| u == from).unwrap();
        rotation[v].insert(pos + 1, to);
    }
    rotation
}

/// Codes of all graphs obtained from `g` by one face split within budget,
/// paired with the number of edges added.
fn children(g: &PlaneGraph, spec: &GenSpec) -> Vec<(usize, Vec<u16>)> {
    let internal = g.vertex_count() - spec.k;
    let spare = spec.max_internal_vertices.saturating_sub(internal);
    if spec.max_faces.is_some_and(|m| g.face_count() > m) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for f in g.internal_faces() {
        let boundary = &g.face(f).boundary;
        let len_f = boundary.len();
        for i in 0..len_f {
            for j in i + 1..len_f {
                let (da, db) = (boundary[i], boundary[j]);
                let (a, b) = (g.head(da), g.head(db));
                if a == b {
                    continue;
                }
                let dist = g.distance(a, b);
                for len in 1..=spare + 1 {
                    if len + dist < spec.girth_floor || (len == 1 && g.has_edge(a, b)) {
                        continue;
                    }
                    let rot = split_face(g, da, db, len);
                    out.push((len, canonical_code(&rot, g.outer_cycle())));
                }
            }
        }
    }
    out
}

/// Calls `visit` on every 2-connected filling of the `k`-cycle within the
/// budget, once each up to rotations and reflections of the outer cycle.
///
/// Graphs arrive canonically labelled, ordered by edge count and then by
/// canonical code. Only one edge-count layer and the layers above it are
/// held in memory at a time.
pub fn for_each_filling(spec: &GenSpec, mut visit: impl FnMut(PlaneGraph)) {
    spec.validate().expect("valid generator spec");
    let k = spec.k;
    let root = cycle_graph(k);
    // Each split adds at least one edge, so layers by edge count are final
    // once all smaller layers are expanded.
    let max_edges = k + 3 * spec.max_internal_vertices + 2 * k;
    let mut layers: Vec<HashSet<Box<[u16]>>> = vec![HashSet::new(); max_edges + 2];
    layers[k].insert(canonical_code(root.rotations(), root.outer_cycle()).into());
    for e in k..layers.len() {
        let mut layer: Vec<Box<[u16]>> = std::mem::take(&mut layers[e]).into_iter().collect();
        layer.sort_unstable();
        for code in layer {
            let g = graph_from_code(&code, k);
            for (added, child) in children(&g, spec) {
                let slot = e + added;
                if slot >= layers.len() {
                    layers.resize_with(slot + 1, HashSet::new);
                }
                layers[slot].insert(child.into());
            }
            visit(g);
        }
    }
}

/// All fillings from [`for_each_filling`], in the same order.
pub fn enumerate_fillings(spec: &GenSpec) -> Vec<PlaneGraph> {
    let mut out = Vec::new();
    for_each_filling(spec, |g| out.push(g));
    out
}

fn regular_polygon(k: usize) -> Vec<(f64, f64)> {
    (0..k)
        .map(|i| {
            let a = std::f64::consts::FRAC_PI_2 - 2.0 * std::f64::consts::PI * i as f64 / k as f64;
            (a.cos(), a.sin())
        })
        .collect()
}

/// Outer polygon `0..k` plus extra points and edges, vertices 1-based in
/// `extra_edges` as in the file format.
fn drawn(k: usize, inner: &[(f64, f64)], extra_edges: &[(usize, usize)]) -> PlaneGraph {
    let mut pts = regular_polygon(k);
    pts.extend_from_slice(inner);
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    edges.extend(extra_edges.iter().map(|&(a, b)| (a - 1, b - 1)));
    PlaneGraph::from_drawing(&pts, &edges, &(0..k).collect::<Vec<_>>()).expect("fixture is valid")
}

/// Named example graphs. Outer vertices are `c_i = i`, clockwise; inner
/// vertices follow.
pub fn fixtures() -> Vec<(&'static str, PlaneGraph)> {
    vec![
        // hexagon with a centre joined to c1, c3, c5
        (
            "HEX_QUAD",
            drawn(6, &[(0.0, 0.0)], &[(7, 1), (7, 3), (7, 5)]),
        ),
        ("C8_CHORD", drawn(8, &[], &[(1, 5)])),
        // x = 9 on c8, c4; y = 10 on x, c5, c7
        (
            "F3_CASE_B",
            drawn(
                8,
                &[(0.0, 0.0), (-0.45, -0.45)],
                &[(9, 8), (9, 4), (10, 9), (10, 5), (10, 7)],
            ),
        ),
        (
            "F4_CASE_C",
            drawn(8, &[(0.0, 0.0)], &[(9, 1), (9, 4), (9, 6)]),
        ),
        ("C7_CASE_A", drawn(7, &[], &[(1, 5)])),
        (
            "C7_CASE_B",
            drawn(7, &[(0.0, 0.0)], &[(8, 1), (8, 4), (8, 6)]),
        ),
        ("C7_CASE_C", c7_case_c()),
        ("C8_CASE_D", c8_case_d()),
    ]
}

pub fn fixture(name: &str) -> Option<PlaneGraph> {
    fixtures()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, g)| g)
}

// c2 u v c4 with the 5-face c2 c3 c4 v u, found by generator search
const C7_CASE_C: &str = "\
vertices 10
outer 1 2 3 4 5 6 7
rot 1: 2 7
rot 2: 3 8 1
rot 3: 4 2
rot 4: 5 9 3
rot 5: 6 10 4
rot 6: 7 5
rot 7: 1 8 10 6
rot 8: 2 9 7
rot 9: 4 10 8
rot 10: 5 7 9
";

// f1 = c1 c2 z y c8, f2 = z c4 c5 w y with z = 9, y = 11, w = 10
const C8_CASE_D: &str = "\
vertices 11
outer 1 2 3 4 5 6 7 8
rot 1: 2 8
rot 2: 3 9 1
rot 3: 4 2
rot 4: 5 9 3
rot 5: 6 10 4
rot 6: 7 5
rot 7: 8 10 6
rot 8: 1 11 7
rot 9: 2 4 11
rot 10: 5 7 11
rot 11: 8 9 10
";

fn c7_case_c() -> PlaneGraph {
    PlaneGraph::parse(C7_CASE_C).expect("fixture is valid")
}

fn c8_case_d() -> PlaneGraph {
    PlaneGraph::parse(C8_CASE_D).expect("fixture is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(k: usize, budget: usize, girth: usize) -> usize {
        enumerate_fillings(&GenSpec::new(k, budget, girth).unwrap()).len()
    }

    #[test]
    fn tiny_counts() {
        assert_eq!(count(4, 0, 4), 1);
        assert_eq!(count(5, 0, 4), 1);
        // hexagon and hexagon with a long chord
        assert_eq!(count(6, 0, 4), 2);
        // plus v on c1 c3, v on c1 c4, the centre on c1 c3 c5, and a long
        // chord with v in one of its 4-faces
        assert_eq!(count(6, 1, 4), 6);
        // 8-cycle and 8-cycle with a chord c1c5
        assert_eq!(count(8, 0, 5), 2);
    }

    #[test]
    fn hexagon_one_vertex() {
        let gs = enumerate_fillings(&GenSpec::new(6, 1, 4).unwrap());
        let shapes: Vec<(usize, Vec<usize>)> = gs
            .iter()
            .map(|g| {
                let mut lens: Vec<usize> = g.internal_faces().map(|f| g.face_len(f)).collect();
                lens.sort();
                (g.vertex_count(), lens)
            })
            .collect();
        assert!(shapes.contains(&(6, vec![6])));
        assert!(shapes.contains(&(6, vec![4, 4])));
        assert!(shapes.contains(&(7, vec![4, 4, 4])));
    }

    #[test]
    fn canonical_form_ignores_rotation_and_reflection() {
        let g = fixture("F3_CASE_B").unwrap();
        let (code, h) = canonicalize(&g);
        let k = 8;
        // relabel outer vertices by a rotation of 3 and reflect
        let perm: Vec<usize> = (0..g.vertex_count())
            .map(|v| if v < k { (k + 3 - v) % k } else { v })
            .collect();
        let mut rot = vec![Vec::new(); g.vertex_count()];
        for v in 0..g.vertex_count() {
            rot[perm[v]] = g.rotation(v).iter().rev().map(|&u| perm[u]).collect();
        }
        let mut outer: Vec<usize> = (0..k).map(|i| perm[i]).collect();
        outer.reverse();
        let mirrored = PlaneGraph::new(rot, outer).unwrap();
        assert_eq!(canonicalize(&mirrored).0, code);
        assert_eq!(canonicalize(&h).0, code);
    }

    #[test]
    fn generated_graphs_distinct_and_valid() {
        let gs = enumerate_fillings(&GenSpec::new(7, 3, 4).unwrap());
        let codes: HashSet<Vec<u16>> = gs.iter().map(|g| canonicalize(g).0).collect();
        assert_eq!(codes.len(), gs.len());
        for g in &gs {
            assert!(g.girth() >= 4);
            assert_eq!(g.outer_cycle(), (0..7).collect::<Vec<_>>());
        }
    }

    #[test]
    fn counts_monotone_in_budget() {
        let mut last = 0;
        for b in 0..=3 {
            let c = count(6, b, 4);
            assert!(c >= last);
            last = c;
        }
    }

    #[test]
    fn girth_five_fillings() {
        for g in enumerate_fillings(&GenSpec::new(8, 2, 5).unwrap()) {
            assert!(g.girth() >= 5);
        }
    }
}
