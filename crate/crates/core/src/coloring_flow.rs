//! Proper 3-colorings, the backtracking extension oracle, and the
//! correspondence between colorings and orientations of the dual.
//!
//! For a dart `d = u -> v` the edge is oriented towards the face on the right
//! of `d` exactly when `φ(u) - φ(v) ≡ 1 (mod 3)`. With clockwise rotations the
//! face on the right of `d` is the face following the edge when turning
//! clockwise around `u`, so this is the usual "f, e, h in clockwise order,
//! oriented towards h" rule.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::plane_graph::{Dart, FaceId, PlaneGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("color {0} is not in 1..=3")]
    BadColor(u8),
    #[error("expected {expected} colors for the outer cycle, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("adjacent vertices {0} and {1} share a color")]
    NotProper(usize, usize),
    #[error("vertex {0} on the outer cycle is uncolored")]
    Uncolored(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A partial or total assignment of colors `1..=3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    colors: Vec<Option<u8>>,
}

impl Coloring {
    pub fn empty(n: usize) -> Self {
        Coloring {
            colors: vec![None; n],
        }
    }

    pub fn from_total(colors: &[u8]) -> Result<Self, ColoringError> {
        if let Some(&c) = colors.iter().find(|&&c| !(1..=3).contains(&c)) {
            return Err(ColoringError::BadColor(c));
        }
        Ok(Coloring {
            colors: colors.iter().map(|&c| Some(c)).collect(),
        })
    }

    /// Precoloring of the outer cycle, colors given in outer-cycle order.
    pub fn from_outer(g: &PlaneGraph, colors: &[u8]) -> Result<Self, ColoringError> {
        let outer = g.outer_cycle();
        if colors.len() != outer.len() {
            return Err(ColoringError::WrongLength {
                expected: outer.len(),
                got: colors.len(),
            });
        }
        let mut psi = Coloring::empty(g.vertex_count());
        for (&v, &c) in outer.iter().zip(colors) {
            if !(1..=3).contains(&c) {
                return Err(ColoringError::BadColor(c));
            }
            psi.colors[v] = Some(c);
        }
        psi.check_precoloring(g)?;
        Ok(psi)
    }

    #[inline]
    pub fn get(&self, v: usize) -> Option<u8> {
        self.colors[v]
    }

    /// Color of `v`; panics if `v` is uncolored.
    #[inline]
    pub fn color(&self, v: usize) -> u8 {
        self.colors[v].expect("vertex is colored")
    }

    pub fn set(&mut self, v: usize, c: u8) {
        assert!((1..=3).contains(&c));
        self.colors[v] = Some(c);
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn as_slice(&self) -> &[Option<u8>] {
        &self.colors
    }

    /// First edge whose endpoints are both colored with the same color.
    pub fn conflict(&self, g: &PlaneGraph) -> Option<(usize, usize)> {
        (0..g.edge_count()).map(|e| g.endpoints(e)).find(
            |&(u, v)| matches!((self.colors[u], self.colors[v]), (Some(a), Some(b)) if a == b),
        )
    }

    pub fn is_proper(&self, g: &PlaneGraph) -> bool {
        self.conflict(g).is_none()
    }

    /// Checks that the outer cycle is fully colored and proper as a coloring
    /// of the cycle. Chords are not edges of the cycle and are not checked.
    pub fn check_precoloring(&self, g: &PlaneGraph) -> Result<(), ColoringError> {
        let outer = g.outer_cycle();
        if let Some(&v) = outer.iter().find(|&&v| self.colors[v].is_none()) {
            return Err(ColoringError::Uncolored(v + 1));
        }
        let k = outer.len();
        for i in 0..k {
            let (u, v) = (outer[i], outer[(i + 1) % k]);
            if self.colors[u] == self.colors[v] {
                return Err(ColoringError::NotProper(u + 1, v + 1));
            }
        }
        Ok(())
    }

    /// Colors of the outer cycle in clockwise order.
    pub fn outer_colors(&self, g: &PlaneGraph) -> Vec<u8> {
        g.outer_cycle().iter().map(|&v| self.color(v)).collect()
    }

    /// Restriction to the outer cycle.
    pub fn restrict_to_outer(&self, g: &PlaneGraph) -> Coloring {
        let mut psi = Coloring::empty(self.len());
        for &v in g.outer_cycle() {
            psi.colors[v] = self.colors[v];
        }
        psi
    }

    /// The coloring `4 - φ`.
    pub fn inverted(&self) -> Coloring {
        Coloring {
            colors: self.colors.iter().map(|c| c.map(|c| 4 - c)).collect(),
        }
    }

    /// `color <v> <c>` lines for every colored vertex.
    pub fn to_text(&self) -> String {
        self.colors
            .iter()
            .enumerate()
            .filter_map(|(v, c)| c.map(|c| format!("color {} {}\n", v + 1, c)))
            .collect()
    }

    pub fn parse_text(text: &str, n: usize) -> Result<Self, ColoringError> {
        let mut psi = Coloring::empty(n);
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: &str| ColoringError::Parse {
                line: i + 1,
                message: message.to_string(),
            };
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 || parts[0] != "color" {
                return Err(err("expected `color <v> <c>`"));
            }
            let v: usize = parts[1].parse().map_err(|_| err("bad vertex"))?;
            let c: u8 = parts[2].parse().map_err(|_| err("bad color"))?;
            if v == 0 || v > n {
                return Err(err("vertex out of range"));
            }
            if !(1..=3).contains(&c) {
                return Err(ColoringError::BadColor(c));
            }
            psi.colors[v - 1] = Some(c);
        }
        Ok(psi)
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .colors
            .iter()
            .map(|c| c.map_or("-".to_string(), |c| c.to_string()))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

/// All proper 3-colorings of the outer cycle with `c1 = 1` and `c2 = 2`, one
/// per class of color permutations, in lexicographic order.
pub fn enumerate_outer_colorings(g: &PlaneGraph) -> Vec<Coloring> {
    let k = g.outer_cycle().len();
    let mut out = Vec::new();
    let mut seq = vec![1u8, 2];
    fn rec(k: usize, seq: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if seq.len() == k {
            if seq[k - 1] != seq[0] {
                out.push(seq.clone());
            }
            return;
        }
        let last = *seq.last().unwrap();
        for c in 1..=3 {
            if c != last {
                seq.push(c);
                rec(k, seq, out);
                seq.pop();
            }
        }
    }
    let mut raw = Vec::new();
    rec(k, &mut seq, &mut raw);
    for colors in raw {
        out.push(Coloring::from_outer(g, &colors).expect("proper by construction"));
    }
    out
}

/// Backtracking order: BFS distance from the outer cycle, ties by index.
pub fn extension_order(g: &PlaneGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for &v in g.outer_cycle() {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbors(v) {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    let mut order: Vec<usize> = (0..n).filter(|&v| dist[v] > 0).collect();
    order.sort_by_key(|&v| (dist[v], v));
    order
}

/// Exhaustive extension search on an explicit adjacency structure.
/// `colors` holds the precoloring (0 = free) and receives the extension.
pub(crate) fn backtrack(adj: &[Vec<usize>], order: &[usize], colors: &mut [u8]) -> bool {
    fn rec(adj: &[Vec<usize>], order: &[usize], i: usize, colors: &mut [u8]) -> bool {
        let Some(&v) = order.get(i) else {
            return true;
        };
        let mut used = 0u8;
        for &u in &adj[v] {
            used |= 1 << colors[u];
        }
        for c in 1..=3u8 {
            if used & (1 << c) == 0 {
                colors[v] = c;
                if rec(adj, order, i + 1, colors) {
                    return true;
                }
            }
        }
        colors[v] = 0;
        false
    }
    rec(adj, order, 0, colors)
}

/// A proper total coloring agreeing with `psi` on the outer cycle, or `None`.
///
/// Deterministic: vertices are tried in [`extension_order`], lowest color
/// first. `psi` must be a proper coloring of the outer cycle.
pub fn brute_force_extend(g: &PlaneGraph, psi: &Coloring) -> Option<Coloring> {
    let adj: Vec<Vec<usize>> = (0..g.vertex_count())
        .map(|v| g.neighbors(v).to_vec())
        .collect();
    let order = extension_order(g);
    let mut colors = vec![0u8; g.vertex_count()];
    for &v in g.outer_cycle() {
        colors[v] = psi.color(v);
    }
    if psi.conflict(g).is_some() {
        return None;
    }
    if !backtrack(&adj, &order, &mut colors) {
        return None;
    }
    let phi = Coloring::from_total(&colors).expect("all vertices colored");
    debug_assert!(phi.is_proper(g));
    Some(phi)
}

/// Orientation of the dual: for every edge, the dart whose right-hand face is
/// the head of the dual edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualOrientation {
    head_dart: Vec<Dart>,
}

impl DualOrientation {
    pub fn from_head_darts(head_dart: Vec<Dart>) -> Self {
        DualOrientation { head_dart }
    }

    /// Dart `d` of edge `e` such that the dual edge points to the face on the
    /// right of `d`.
    pub fn head_dart(&self, e: usize) -> Dart {
        self.head_dart[e]
    }

    pub fn head_face(&self, g: &PlaneGraph, e: usize) -> FaceId {
        g.right_face(self.head_dart[e])
    }

    /// Reverses the dual edge of `e`.
    pub fn flip(&mut self, e: usize) {
        self.head_dart[e] = self.head_dart[e].twin();
    }

    /// In-degree minus out-degree of `f` in the oriented dual.
    pub fn delta(&self, g: &PlaneGraph, f: FaceId) -> i32 {
        g.face(f)
            .boundary
            .iter()
            .map(|&d| {
                if self.head_dart[d.edge()] == d.twin() {
                    1
                } else {
                    -1
                }
            })
            .sum()
    }

    /// First face violating `δ ≡ 0 (mod 3)`, `|δ| ≤ |f|` or `δ ≡ |f| (mod 2)`.
    pub fn violation(&self, g: &PlaneGraph) -> Option<(FaceId, i32)> {
        (0..g.face_count()).map(FaceId).find_map(|f| {
            let delta = self.delta(g, f);
            let len = g.face_len(f) as i32;
            let ok =
                delta.rem_euclid(3) == 0 && delta.abs() <= len && (delta - len).rem_euclid(2) == 0;
            (!ok).then_some((f, delta))
        })
    }
}

#[inline]
fn z3(c: u8) -> i32 {
    c as i32 - 1
}

#[inline]
fn points_right(cu: u8, cv: u8) -> bool {
    (z3(cu) - z3(cv)).rem_euclid(3) == 1
}

/// Dual orientation induced by a proper total coloring.
pub fn orient_dual(g: &PlaneGraph, phi: &Coloring) -> DualOrientation {
    let head_dart = (0..g.edge_count())
        .map(|e| {
            let d = Dart(2 * e);
            let (u, v) = (g.tail(d), g.head(d));
            let (cu, cv) = (phi.color(u), phi.color(v));
            assert_ne!(cu, cv, "coloring must be proper");
            let from_u = points_right(cu, cv);
            let from_v = points_right(cv, cu);
            // Reading the rule from the other endpoint gives the same edge.
            assert_ne!(from_u, from_v);
            if from_u {
                d
            } else {
                d.twin()
            }
        })
        .collect();
    DualOrientation { head_dart }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    Source,
    Sink,
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeKind::Source => "source",
            EdgeKind::Sink => "sink",
        })
    }
}

/// Source/sink label of every outer edge; index `i` is the edge `c_i c_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClass {
    pub kinds: Vec<EdgeKind>,
}

impl EdgeClass {
    pub fn n_source(&self) -> usize {
        self.kinds
            .iter()
            .filter(|&&k| k == EdgeKind::Source)
            .count()
    }

    pub fn n_sink(&self) -> usize {
        self.kinds.len() - self.n_source()
    }

    /// `n_t - n_s`.
    pub fn imbalance(&self) -> i32 {
        self.n_sink() as i32 - self.n_source() as i32
    }
}

/// Label of the outer edge `c_i -> c_{i+1}` from its endpoint colors.
pub fn boundary_edge_kind(ci: u8, cnext: u8) -> EdgeKind {
    // The outer face lies on the left of c_i -> c_{i+1}; the dual edge points
    // into the outer face when it points to the left, i.e. when
    // ψ(c_{i+1}) - ψ(c_i) ≡ 1.
    if points_right(cnext, ci) {
        EdgeKind::Sink
    } else {
        EdgeKind::Source
    }
}

/// Classifies the outer edges using only the colors on the outer cycle.
pub fn classify_boundary_edges(g: &PlaneGraph, psi: &Coloring) -> EdgeClass {
    let outer = g.outer_cycle();
    let k = outer.len();
    let kinds = (0..k)
        .map(|i| boundary_edge_kind(psi.color(outer[i]), psi.color(outer[(i + 1) % k])))
        .collect();
    EdgeClass { kinds }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientationError {
    #[error("inconsistent orientation: face {face} has delta {delta}, not divisible by 3")]
    Inconsistent { face: FaceId, delta: i32 },
    #[error("inconsistent orientation: edge {0} {1} disagrees with its neighbourhood")]
    EdgeConflict(usize, usize),
}

/// Recovers the coloring of a nowhere-zero Z3-flow, normalized so that
/// `seed.0` receives color `seed.1`.
pub fn coloring_from_orientation(
    g: &PlaneGraph,
    o: &DualOrientation,
    seed: (usize, u8),
) -> Result<Coloring, OrientationError> {
    for f in (0..g.face_count()).map(FaceId) {
        let delta = o.delta(g, f);
        if delta.rem_euclid(3) != 0 {
            return Err(OrientationError::Inconsistent { face: f, delta });
        }
    }
    let n = g.vertex_count();
    let mut z: Vec<Option<i32>> = vec![None; n];
    z[seed.0] = Some(z3(seed.1));
    let mut queue = VecDeque::from([seed.0]);
    while let Some(u) = queue.pop_front() {
        let zu = z[u].unwrap();
        for &d in g.darts_at(u) {
            let v = g.head(d);
            // φ(u) - φ(v) ≡ 1 when the edge points to the right of u -> v.
            let zv = if o.head_dart(d.edge()) == d {
                zu - 1
            } else {
                zu + 1
            }
            .rem_euclid(3);
            match z[v] {
                None => {
                    z[v] = Some(zv);
                    queue.push_back(v);
                }
                Some(existing) if existing != zv => {
                    return Err(OrientationError::EdgeConflict(u + 1, v + 1));
                }
                Some(_) => {}
            }
        }
    }
    let colors: Vec<u8> = z
        .into_iter()
        .map(|c| c.expect("connected") as u8 + 1)
        .collect();
    Ok(Coloring::from_total(&colors).expect("colors in range"))
}
