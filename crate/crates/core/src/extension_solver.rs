//! Deciding precoloring extension through balanced layouts and maximum flow.
//!
//! A precoloring `ψ` of the outer cycle extends iff some `ψ`-balanced layout
//! `q` admits `c(q, ψ)` edge-disjoint paths between the terminals of the
//! auxiliary network. Extensions are rebuilt from the flow; obstructions are
//! reported as the path or cycle of `G` dual to a small terminal cut.
//!
//! Sign convention: `q(f)` counts the extra flow entering `f` from `s`, so for
//! the orientation of a coloring `q(f)` is out-degree minus in-degree of `f`
//! in the dual and `Σ q = n_t - n_s` on a balanced layout.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::coloring_flow::{
    classify_boundary_edges, coloring_from_orientation, Coloring, DualOrientation, EdgeClass,
    EdgeKind,
};
use crate::maxflow::UndirectedNetwork;
use crate::plane_graph::{Dart, FaceId, PlaneGraph};

/// Largest number of internal faces for the exhaustive cut normalization.
pub const MAX_CUT_SEARCH_FACES: usize = 24;

/// Integer per internal face with `|q(f)| ≤ |f|`, `3 | q(f)` and
/// `q(f) ≡ |f| (mod 2)`. Indexed by [`FaceId`]; the outer entry is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Layout {
    values: Vec<i32>,
}

impl Layout {
    pub fn zero(g: &PlaneGraph) -> Self {
        Layout {
            values: vec![0; g.face_count()],
        }
    }

    /// Builds a layout from values for the internal faces in trace order.
    pub fn from_internal(g: &PlaneGraph, values: &[i32]) -> Option<Self> {
        let faces: Vec<FaceId> = g.internal_faces().collect();
        if faces.len() != values.len() {
            return None;
        }
        let mut q = Layout::zero(g);
        for (&f, &v) in faces.iter().zip(values) {
            if !allowed_values(g.face_len(f)).contains(&v) {
                return None;
            }
            q.values[f.0] = v;
        }
        Some(q)
    }

    #[inline]
    pub fn get(&self, f: FaceId) -> i32 {
        self.values[f.0]
    }

    /// `m`, the sum over all internal faces.
    pub fn total(&self) -> i32 {
        self.values.iter().sum()
    }

    pub fn internal_values(&self, g: &PlaneGraph) -> Vec<i32> {
        g.internal_faces().map(|f| self.values[f.0]).collect()
    }

    /// Comma-separated values for the internal faces in trace order.
    pub fn display(&self, g: &PlaneGraph) -> String {
        self.internal_values(g)
            .iter()
            .map(i32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Admissible layout values for a face of the given length, ascending.
pub fn allowed_values(len: usize) -> Vec<i32> {
    let len = len as i32;
    (-len..=len)
        .filter(|q| q.rem_euclid(3) == 0 && (q - len).rem_euclid(2) == 0)
        .collect()
}

/// Every value of `m` reachable by some layout.
pub fn achievable_totals(g: &PlaneGraph) -> BTreeSet<i32> {
    let mut sums = BTreeSet::from([0]);
    for f in g.internal_faces() {
        let vals = allowed_values(g.face_len(f));
        sums = sums
            .iter()
            .flat_map(|s| vals.iter().map(move |v| s + v))
            .collect();
    }
    sums
}

/// All `ψ`-balanced layouts (`m = n_t - n_s`), faces in trace order and
/// values ascending.
pub fn enumerate_balanced_layouts(g: &PlaneGraph, psi: &Coloring) -> Vec<Layout> {
    let target = classify_boundary_edges(g, psi).imbalance();
    let faces: Vec<FaceId> = g.internal_faces().collect();
    let options: Vec<Vec<i32>> = faces
        .iter()
        .map(|&f| allowed_values(g.face_len(f)))
        .collect();
    // Range of sums still reachable from position i onwards.
    let mut reach = vec![(0i32, 0i32); faces.len() + 1];
    for i in (0..faces.len()).rev() {
        let lo = *options[i].first().unwrap();
        let hi = *options[i].last().unwrap();
        reach[i] = (reach[i + 1].0 + lo, reach[i + 1].1 + hi);
    }
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(faces.len());
    fn rec(
        i: usize,
        sum: i32,
        target: i32,
        options: &[Vec<i32>],
        reach: &[(i32, i32)],
        chosen: &mut Vec<i32>,
        out: &mut Vec<Vec<i32>>,
    ) {
        if i == options.len() {
            if sum == target {
                out.push(chosen.clone());
            }
            return;
        }
        for &v in &options[i] {
            let rest = target - sum - v;
            if rest < reach[i + 1].0 || rest > reach[i + 1].1 {
                continue;
            }
            chosen.push(v);
            rec(i + 1, sum + v, target, options, reach, chosen, out);
            chosen.pop();
        }
    }
    let mut raw = Vec::new();
    rec(0, 0, target, &options, &reach, &mut chosen, &mut raw);
    for values in raw {
        let mut q = Layout::zero(g);
        for (&f, v) in faces.iter().zip(values) {
            q.values[f.0] = v;
        }
        out.push(q);
    }
    out
}

/// Where an edge of the auxiliary network comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NetOrigin {
    /// Dual of the internal edge `edge` of `G`; stored from the face on the
    /// left of dart `2 * edge` to the face on its right.
    Dual { edge: usize },
    /// One of the `q(f)` parallel edges `s - f`.
    LayoutSource { face: FaceId },
    /// One of the `-q(f)` parallel edges `f - t`.
    LayoutSink { face: FaceId },
    /// Outer edge `edge` of `G`, joined to `t` if sink and to `s` if source.
    Boundary { edge: usize, kind: EdgeKind },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NetEdge {
    pub a: usize,
    pub b: usize,
    pub origin: NetOrigin,
}

impl NetEdge {
    pub fn is_terminal(&self) -> bool {
        !matches!(self.origin, NetOrigin::Dual { .. })
    }
}

/// The network `G^{q,ψ}`: one node per internal face plus terminals `s`, `t`.
#[derive(Debug, Clone)]
pub struct AuxNetwork {
    pub faces: Vec<FaceId>,
    face_node: Vec<Option<usize>>,
    pub s: usize,
    pub t: usize,
    pub edges: Vec<NetEdge>,
}

impl AuxNetwork {
    pub fn node_count(&self) -> usize {
        self.faces.len() + 2
    }

    pub fn node_of(&self, f: FaceId) -> Option<usize> {
        self.face_node[f.0]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.a == node) + usize::from(e.b == node))
            .sum()
    }

    /// `c(q, ψ)`, the degree of `s`.
    pub fn capacity(&self) -> usize {
        self.degree(self.s)
    }

    fn unit_network(&self, weight: impl Fn(&NetEdge) -> i64) -> UndirectedNetwork {
        let mut net = UndirectedNetwork::with_capacity(self.node_count(), self.edges.len());
        for e in &self.edges {
            net.add_edge(e.a, e.b, weight(e));
        }
        net
    }
}

/// Builds `G^{q,ψ}`.
pub fn build_aux_network(g: &PlaneGraph, q: &Layout, psi: &Coloring) -> AuxNetwork {
    let faces: Vec<FaceId> = g.internal_faces().collect();
    let mut face_node = vec![None; g.face_count()];
    for (i, &f) in faces.iter().enumerate() {
        face_node[f.0] = Some(i);
    }
    let s = faces.len();
    let t = s + 1;
    let mut edges = Vec::new();
    for e in 0..g.edge_count() {
        if g.is_outer_edge(e) {
            continue;
        }
        let d = Dart(2 * e);
        edges.push(NetEdge {
            a: face_node[g.left_face(d).0].unwrap(),
            b: face_node[g.right_face(d).0].unwrap(),
            origin: NetOrigin::Dual { edge: e },
        });
    }
    for (i, &f) in faces.iter().enumerate() {
        let v = q.get(f);
        for _ in 0..v.max(0) {
            edges.push(NetEdge {
                a: s,
                b: i,
                origin: NetOrigin::LayoutSource { face: f },
            });
        }
        for _ in 0..(-v).max(0) {
            edges.push(NetEdge {
                a: i,
                b: t,
                origin: NetOrigin::LayoutSink { face: f },
            });
        }
    }
    let class = classify_boundary_edges(g, psi);
    for (i, &d) in g.outer_darts().iter().enumerate() {
        let inner = face_node[g.right_face(d).0].unwrap();
        let kind = class.kinds[i];
        let (a, b) = match kind {
            EdgeKind::Sink => (inner, t),
            EdgeKind::Source => (s, inner),
        };
        edges.push(NetEdge {
            a,
            b,
            origin: NetOrigin::Boundary {
                edge: d.edge(),
                kind,
            },
        });
    }
    AuxNetwork {
        faces,
        face_node,
        s,
        t,
        edges,
    }
}

#[derive(Debug, Clone)]
pub struct MaxFlow {
    pub value: usize,
    /// Net unit flow per network edge: `1` along `a -> b`, `-1` along `b -> a`.
    pub flow: Vec<i8>,
    /// A minimum cut with the fewest non-terminal edges, taking the source
    /// side as small as possible.
    pub cut: Vec<usize>,
    pub source_side: Vec<bool>,
}

/// Maximum number of edge-disjoint `s-t` paths and a normalized minimum cut.
pub fn max_flow_min_cut(n: &AuxNetwork) -> MaxFlow {
    let (value, flow) = unit_flow(n);
    let (cut, source_side) = normalized_min_cut(n);
    MaxFlow {
        value,
        flow,
        cut,
        source_side,
    }
}

fn unit_flow(n: &AuxNetwork) -> (usize, Vec<i8>) {
    let r = n.unit_network(|_| 1).max_flow(n.s, n.t);
    (r.value as usize, r.flow.iter().map(|&f| f as i8).collect())
}

/// Weights `W + [non-terminal]` make a minimum weighted cut a minimum cut
/// that, among those, has the fewest non-terminal edges.
fn normalized_min_cut(n: &AuxNetwork) -> (Vec<usize>, Vec<bool>) {
    let w = n.edges.len() as i64 + 1;
    let side = n
        .unit_network(|e| if e.is_terminal() { w } else { w + 1 })
        .max_flow(n.s, n.t)
        .source_side;
    let cut = n
        .edges
        .iter()
        .enumerate()
        .filter(|(_, e)| side[e.a] != side[e.b])
        .map(|(i, _)| i)
        .collect();
    (cut, side)
}

/// The subgraph `K0` of `G` dual to the non-terminal edges of a small cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutStructure {
    /// `K0` is a path between two outer vertices with no internal vertex on
    /// the outer cycle. `arc` is the clockwise outer path from the first to
    /// the last vertex of `path`; the counts refer to that arc and `m` to the
    /// faces inside `arc + K0`.
    PathObstruction {
        path: Vec<usize>,
        arc: Vec<usize>,
        n_s: usize,
        n_t: usize,
        m: i32,
    },
    /// `K0` is a cycle with at most one outer vertex; `m` sums `q` inside it.
    CycleObstruction { cycle: Vec<usize>, m: i32 },
}

impl CutStructure {
    /// `|K0|`.
    pub fn k0_len(&self) -> usize {
        match self {
            CutStructure::PathObstruction { path, .. } => path.len() - 1,
            CutStructure::CycleObstruction { cycle, .. } => cycle.len(),
        }
    }

    /// `|n_s + m - n_t| > |K0|` or `|m| > |K0|`.
    pub fn inequality_holds(&self) -> bool {
        let k0 = self.k0_len() as i32;
        match *self {
            CutStructure::PathObstruction { n_s, n_t, m, .. } => {
                (n_s as i32 + m - n_t as i32).abs() > k0
            }
            CutStructure::CycleObstruction { m, .. } => m.abs() > k0,
        }
    }

    /// Edges of `K0` as vertex pairs.
    pub fn k0_edges(&self) -> Vec<(usize, usize)> {
        match self {
            CutStructure::PathObstruction { path, .. } => {
                path.windows(2).map(|w| (w[0], w[1])).collect()
            }
            CutStructure::CycleObstruction { cycle, .. } => (0..cycle.len())
                .map(|i| (cycle[i], cycle[(i + 1) % cycle.len()]))
                .collect(),
        }
    }

    pub fn certificate(&self) -> String {
        match self {
            CutStructure::PathObstruction { n_s, n_t, m, .. } => format!("ns={n_s} nt={n_t} m={m}"),
            CutStructure::CycleObstruction { m, .. } => format!("m={m}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CutError {
    #[error("cut of size {size} is not smaller than c(q,psi) = {capacity}")]
    NotSmaller { size: usize, capacity: usize },
    #[error("no terminal cut smaller than c(q,psi) exists")]
    NoSmallCut,
    #[error("cut does not yield a path or cycle: {0}")]
    Shape(String),
    #[error("cut structure violates its inequality: {0:?}")]
    Inequality(CutStructure),
    #[error("{0} internal faces exceed the exhaustive cut search limit")]
    TooManyFaces(usize),
}

/// Interprets a terminal cut smaller than `c(q, ψ)` as a path or cycle of
/// `G`.
///
/// The given cut is used directly when its non-terminal edges already form a
/// path or cycle satisfying the inequality. Otherwise the cut is renormalized
/// exhaustively: among all terminal cuts smaller than `c(q, ψ)`, one with the
/// fewest non-terminal edges, then the fewest edges.
pub fn analyze_cut(
    g: &PlaneGraph,
    psi: &Coloring,
    q: &Layout,
    cut: &[usize],
) -> Result<CutStructure, CutError> {
    let net = build_aux_network(g, q, psi);
    let capacity = net.capacity();
    if cut.len() >= capacity {
        return Err(CutError::NotSmaller {
            size: cut.len(),
            capacity,
        });
    }
    let class = classify_boundary_edges(g, psi);
    let k0: Vec<usize> = cut
        .iter()
        .filter_map(|&i| match net.edges[i].origin {
            NetOrigin::Dual { edge } => Some(edge),
            _ => None,
        })
        .collect();
    if let Ok(structure) = interpret_k0(g, &class, q, &k0) {
        if structure.inequality_holds() {
            return Ok(structure);
        }
    }
    let k0 = normalized_k0(&net)?;
    let structure = interpret_k0(g, &class, q, &k0)?;
    if structure.inequality_holds() {
        Ok(structure)
    } else {
        Err(CutError::Inequality(structure))
    }
}

/// Exhaustive search over source sides for the normalized cut.
fn normalized_k0(net: &AuxNetwork) -> Result<Vec<usize>, CutError> {
    let f = net.faces.len();
    if f > MAX_CUT_SEARCH_FACES {
        return Err(CutError::TooManyFaces(f));
    }
    let mut s_cnt = vec![0usize; f];
    let mut t_cnt = vec![0usize; f];
    let mut dual = Vec::new();
    for (i, e) in net.edges.iter().enumerate() {
        if e.a == net.s {
            s_cnt[e.b] += 1;
        } else if e.b == net.t {
            t_cnt[e.a] += 1;
        } else if e.a != e.b {
            dual.push((i, e.a, e.b));
        }
    }
    let capacity: usize = s_cnt.iter().sum();
    let mut best: Option<(usize, usize, u32)> = None;
    for mask in 0u32..(1u32 << f) {
        let inside = |v: usize| mask >> v & 1 == 1;
        let k0 = dual
            .iter()
            .filter(|&&(_, a, b)| inside(a) != inside(b))
            .count();
        if k0 == 0 {
            continue;
        }
        if best.is_some_and(|(bk0, _, _)| k0 > bk0) {
            continue;
        }
        let size = k0
            + (0..f)
                .map(|v| if inside(v) { t_cnt[v] } else { s_cnt[v] })
                .sum::<usize>();
        if size >= capacity {
            continue;
        }
        if best.is_none_or(|(bk0, bsize, _)| (k0, size) < (bk0, bsize)) {
            best = Some((k0, size, mask));
        }
    }
    let (_, _, mask) = best.ok_or(CutError::NoSmallCut)?;
    Ok(dual
        .iter()
        .filter(|&&(_, a, b)| (mask >> a & 1) != (mask >> b & 1))
        .map(|&(i, _, _)| match net.edges[i].origin {
            NetOrigin::Dual { edge } => edge,
            _ => unreachable!(),
        })
        .collect())
}

/// Reads a set of edges of `G` as a path or cycle obstruction.
fn interpret_k0(
    g: &PlaneGraph,
    class: &EdgeClass,
    q: &Layout,
    k0: &[usize],
) -> Result<CutStructure, CutError> {
    if k0.is_empty() {
        return Err(CutError::Shape("no non-terminal edges".into()));
    }
    let n = g.vertex_count();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &e in k0 {
        let (u, v) = g.endpoints(e);
        adj[u].push(v);
        adj[v].push(u);
    }
    let verts: Vec<usize> = (0..n).filter(|&v| !adj[v].is_empty()).collect();
    if verts.iter().any(|&v| adj[v].len() > 2) {
        return Err(CutError::Shape("a vertex has degree above two".into()));
    }
    let ends: Vec<usize> = verts
        .iter()
        .copied()
        .filter(|&v| adj[v].len() == 1)
        .collect();
    let walk_from = |start: usize| {
        let mut seq = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = adj[cur].iter().copied().find(|&w| w != prev);
            match next {
                Some(w) if w != start => {
                    prev = cur;
                    cur = w;
                    seq.push(w);
                }
                _ => break,
            }
        }
        seq
    };
    let outer = g.outer_cycle();
    let pos = |v: usize| outer.iter().position(|&c| c == v);
    match ends.len() {
        2 => {
            let (a, b) = match (pos(ends[0]), pos(ends[1])) {
                (Some(x), Some(y)) if x < y => (ends[0], ends[1]),
                (Some(_), Some(_)) => (ends[1], ends[0]),
                _ => return Err(CutError::Shape("path end off the outer cycle".into())),
            };
            let path = walk_from(a);
            if path.len() != verts.len() || *path.last().unwrap() != b {
                return Err(CutError::Shape("edges do not form a single path".into()));
            }
            if path[1..path.len() - 1].iter().any(|&v| pos(v).is_some()) {
                return Err(CutError::Shape(
                    "path has an internal vertex on the outer cycle".into(),
                ));
            }
            let k = outer.len();
            let (ia, ib) = (pos(a).unwrap(), pos(b).unwrap());
            let arc: Vec<usize> = (0..=(ib + k - ia) % k)
                .map(|j| outer[(ia + j) % k])
                .collect();
            let (mut n_s, mut n_t) = (0, 0);
            for j in 0..arc.len() - 1 {
                match class.kinds[(ia + j) % k] {
                    EdgeKind::Source => n_s += 1,
                    EdgeKind::Sink => n_t += 1,
                }
            }
            // arc followed by the path back from b to a
            let mut cycle = arc.clone();
            cycle.extend(path.iter().rev().skip(1).take(path.len() - 2));
            let m = g
                .faces_inside(&cycle)
                .map_err(|e| CutError::Shape(e.to_string()))?
                .iter()
                .map(|&f| q.get(f))
                .sum();
            Ok(CutStructure::PathObstruction {
                path,
                arc,
                n_s,
                n_t,
                m,
            })
        }
        0 => {
            let start = verts[0];
            let cycle = walk_from(start);
            if cycle.len() != verts.len() || cycle.len() < 3 {
                return Err(CutError::Shape("edges do not form a single cycle".into()));
            }
            if cycle.iter().filter(|&&v| pos(v).is_some()).count() > 1 {
                return Err(CutError::Shape("cycle meets the outer cycle twice".into()));
            }
            let m = g
                .faces_inside(&cycle)
                .map_err(|e| CutError::Shape(e.to_string()))?
                .iter()
                .map(|&f| q.get(f))
                .sum();
            Ok(CutStructure::CycleObstruction { cycle, m })
        }
        _ => Err(CutError::Shape(format!("{} path ends", ends.len()))),
    }
}

/// Outcome for one balanced layout that admits no saturating flow.
#[derive(Debug, Clone)]
pub struct LayoutCut {
    pub layout: Layout,
    pub capacity: usize,
    pub flow_value: usize,
    pub cut: Vec<usize>,
    pub structure: Result<CutStructure, CutError>,
}

#[derive(Debug, Clone)]
pub enum Verdict {
    Extends {
        layout: Layout,
        witness: Coloring,
    },
    /// No layout is balanced: `d = n_t - n_s` is not an achievable total.
    Imbalanced {
        d: i32,
        achievable: BTreeSet<i32>,
    },
    /// Every balanced layout has a terminal cut below `c(q, ψ)`.
    Blocked(Vec<LayoutCut>),
}

impl Verdict {
    pub fn extends(&self) -> bool {
        matches!(self, Verdict::Extends { .. })
    }

    pub fn witness(&self) -> Option<&Coloring> {
        match self {
            Verdict::Extends { witness, .. } => Some(witness),
            _ => None,
        }
    }

    /// Line-oriented report.
    pub fn report(&self, g: &PlaneGraph) -> String {
        let mut out = String::new();
        match self {
            Verdict::Extends { witness, .. } => {
                out.push_str("verdict EXTENDS\n");
                for v in 0..g.vertex_count() {
                    out.push_str(&format!("witness color {} {}\n", v + 1, witness.color(v)));
                }
            }
            Verdict::Imbalanced { d, achievable } => {
                out.push_str("verdict NOT_EXTENDS\n");
                let set: Vec<String> = achievable.iter().map(i32::to_string).collect();
                out.push_str(&format!(
                    "reason imbalance: d = {d}, achievable m set = {{{}}}\n",
                    set.join(", ")
                ));
            }
            Verdict::Blocked(cuts) => {
                out.push_str("verdict NOT_EXTENDS\n");
                for lc in cuts {
                    match &lc.structure {
                        Ok(st) => {
                            let edges: Vec<String> = st
                                .k0_edges()
                                .iter()
                                .map(|(u, v)| format!("{}-{}", u + 1, v + 1))
                                .collect();
                            out.push_str(&format!(
                                "layout {} cut {} certificate {}\n",
                                lc.layout.display(g),
                                edges.join(","),
                                st.certificate()
                            ));
                        }
                        Err(e) => out.push_str(&format!(
                            "layout {} cut-error {}\n",
                            lc.layout.display(g),
                            e
                        )),
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.extends() {
            "EXTENDS"
        } else {
            "NOT_EXTENDS"
        })
    }
}

/// Decides whether `psi` extends, returning a verified witness or one small
/// cut per balanced layout.
pub fn decide_extension(g: &PlaneGraph, psi: &Coloring) -> Verdict {
    decide(g, psi, true)
}

/// As [`decide_extension`] without interpreting cuts.
pub fn decide_extension_fast(g: &PlaneGraph, psi: &Coloring) -> Verdict {
    decide(g, psi, false)
}

fn decide(g: &PlaneGraph, psi: &Coloring, analyze: bool) -> Verdict {
    let layouts = enumerate_balanced_layouts(g, psi);
    if layouts.is_empty() {
        return Verdict::Imbalanced {
            d: classify_boundary_edges(g, psi).imbalance(),
            achievable: achievable_totals(g),
        };
    }
    let mut cuts = Vec::new();
    for q in layouts {
        let net = build_aux_network(g, &q, psi);
        let capacity = net.capacity();
        debug_assert_eq!(capacity, net.degree(net.t));
        let (value, flow) = unit_flow(&net);
        if value == capacity {
            let witness = witness_from_flow(g, psi, &net, &flow);
            return Verdict::Extends { layout: q, witness };
        }
        let (cut, structure) = if analyze {
            let (cut, _) = normalized_min_cut(&net);
            let structure = analyze_cut(g, psi, &q, &cut);
            (cut, structure)
        } else {
            (Vec::new(), Err(CutError::Shape("not analyzed".into())))
        };
        cuts.push(LayoutCut {
            layout: q,
            capacity,
            flow_value: value,
            cut,
            structure,
        });
    }
    Verdict::Blocked(cuts)
}

/// Orients the unused network edges along closed trails, each started from
/// the smallest unused edge in its stored direction.
fn orient_remainder(net: &AuxNetwork, flow: &[i8]) -> Vec<i8> {
    let mut dir = flow.to_vec();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); net.node_count()];
    for (i, e) in net.edges.iter().enumerate() {
        if flow[i] == 0 {
            incident[e.a].push(i);
            if e.b != e.a {
                incident[e.b].push(i);
            }
        }
    }
    let mut used = vec![false; net.edges.len()];
    for first in 0..net.edges.len() {
        if flow[first] != 0 || used[first] {
            continue;
        }
        let start = net.edges[first].a;
        used[first] = true;
        dir[first] = 1;
        let mut cur = net.edges[first].b;
        while cur != start {
            let next = incident[cur]
                .iter()
                .copied()
                .find(|&i| !used[i])
                .expect("remainder has even degrees");
            used[next] = true;
            let e = net.edges[next];
            if e.a == cur {
                dir[next] = 1;
                cur = e.b;
            } else {
                dir[next] = -1;
                cur = e.a;
            }
        }
    }
    dir
}

fn witness_from_flow(g: &PlaneGraph, psi: &Coloring, net: &AuxNetwork, flow: &[i8]) -> Coloring {
    let dir = orient_remainder(net, flow);
    let mut head = vec![Dart(0); g.edge_count()];
    let class = classify_boundary_edges(g, psi);
    for (i, &d) in g.outer_darts().iter().enumerate() {
        // The outer face is on the left of d, i.e. on the right of its twin.
        head[d.edge()] = match class.kinds[i] {
            EdgeKind::Sink => d.twin(),
            EdgeKind::Source => d,
        };
    }
    for (i, e) in net.edges.iter().enumerate() {
        if let NetOrigin::Dual { edge } = e.origin {
            head[edge] = if dir[i] > 0 {
                Dart(2 * edge)
            } else {
                Dart(2 * edge + 1)
            };
        }
    }
    let o = DualOrientation::from_head_darts(head);
    let c1 = g.outer_cycle()[0];
    let phi = coloring_from_orientation(g, &o, (c1, psi.color(c1)))
        .expect("a saturating flow yields a nowhere-zero Z3-flow");
    assert!(phi.is_proper(g), "witness coloring must be proper");
    assert!(
        g.outer_cycle().iter().all(|&v| phi.get(v) == psi.get(v)),
        "witness coloring must extend the precoloring"
    );
    phi
}
