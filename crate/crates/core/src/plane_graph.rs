//! Plane graphs stored as rotation systems.
//!
//! Every vertex carries the CLOCKWISE cyclic order of its neighbours. Faces are
//! traced with `next(d) = next_cw(twin(d))`, which keeps the traced face on the
//! left of each dart. Internal faces therefore come out counter-clockwise and
//! the outer face comes out clockwise, matching the `outer` line of the file
//! format.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

/// A directed half-edge. Dart `2e` and `2e + 1` are the two sides of edge `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(pub usize);

impl Dart {
    #[inline]
    pub fn twin(self) -> Dart {
        Dart(self.0 ^ 1)
    }

    #[inline]
    pub fn edge(self) -> usize {
        self.0 >> 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceId(pub usize);

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    /// Boundary walk, each dart having this face on its left.
    pub boundary: Vec<Dart>,
    pub is_outer: bool,
}

impl Face {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid rotation system: {0}")]
    Rotation(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("triangle found: {0} {1} {2}")]
    TriangleFound(usize, usize, usize),
    #[error("outer walk not a cycle: {0}")]
    OuterNotCycle(String),
    #[error("rotation system is not planar: V - E + F = {0}")]
    NotPlanar(i64),
    #[error("internal face of length {0} (< 4)")]
    ShortFace(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("not a cycle of the graph: {0}")]
    NotACycle(String),
    #[error("the outer cycle has no interior face set in this sense")]
    IsOuterCycle,
}

/// A connected, triangle-free, simple plane graph whose outer face is bounded
/// by a cycle. Vertices are `0..vertex_count()`; the text format names them
/// `1..=n`.
#[derive(Debug, Clone)]
pub struct PlaneGraph {
    rotation: Vec<Vec<usize>>,
    vertex_darts: Vec<Vec<Dart>>,
    tail: Vec<usize>,
    rot_pos: Vec<usize>,
    faces: Vec<Face>,
    dart_face: Vec<FaceId>,
    outer_face: FaceId,
    outer_cycle: Vec<usize>,
    outer_edge_pos: Vec<Option<usize>>,
}

impl PlaneGraph {
    /// Builds and validates a graph from clockwise rotation lists and the
    /// clockwise outer cycle.
    pub fn new(rotation: Vec<Vec<usize>>, outer_cycle: Vec<usize>) -> Result<Self, GraphError> {
        let n = rotation.len();
        if n == 0 {
            return Err(GraphError::Rotation("no vertices".into()));
        }
        for (v, nbrs) in rotation.iter().enumerate() {
            let mut seen = HashSet::new();
            for &u in nbrs {
                if u >= n {
                    return Err(GraphError::Rotation(format!(
                        "vertex {} lists unknown neighbour {}",
                        v + 1,
                        u + 1
                    )));
                }
                if u == v {
                    return Err(GraphError::Rotation(format!("loop at vertex {}", v + 1)));
                }
                if !seen.insert(u) {
                    return Err(GraphError::Rotation(format!(
                        "parallel edge {} {}",
                        v + 1,
                        u + 1
                    )));
                }
            }
        }

        // Pair darts into edges.
        let mut vertex_darts: Vec<Vec<Dart>> =
            rotation.iter().map(|r| vec![Dart(0); r.len()]).collect();
        let mut tail = Vec::new();
        let mut rot_pos = Vec::new();
        let mut edge_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (v, nbrs) in rotation.iter().enumerate() {
            for &u in nbrs {
                let key = (v.min(u), v.max(u));
                if !edge_of.contains_key(&key) {
                    let e = edge_of.len();
                    edge_of.insert(key, e);
                }
            }
        }
        let m = edge_of.len();
        tail.resize(2 * m, usize::MAX);
        rot_pos.resize(2 * m, usize::MAX);
        for (v, nbrs) in rotation.iter().enumerate() {
            for (i, &u) in nbrs.iter().enumerate() {
                let e = edge_of[&(v.min(u), v.max(u))];
                let d = Dart(2 * e + usize::from(v > u));
                vertex_darts[v][i] = d;
                tail[d.0] = v;
                rot_pos[d.0] = i;
            }
        }
        if let Some(d) = tail.iter().position(|&t| t == usize::MAX) {
            let e = d / 2;
            let (a, b) = edge_of
                .iter()
                .find(|(_, &x)| x == e)
                .map(|(k, _)| *k)
                .unwrap();
            return Err(GraphError::Rotation(format!(
                "edge {} {} is listed at only one endpoint",
                a + 1,
                b + 1
            )));
        }

        let mut g = PlaneGraph {
            rotation,
            vertex_darts,
            tail,
            rot_pos,
            faces: Vec::new(),
            dart_face: Vec::new(),
            outer_face: FaceId(0),
            outer_cycle: Vec::new(),
            outer_edge_pos: Vec::new(),
        };

        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        if let Some((a, b, c)) = g.find_triangle() {
            return Err(GraphError::TriangleFound(a + 1, b + 1, c + 1));
        }

        let faces = g.trace_faces();
        let euler = n as i64 - m as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(GraphError::NotPlanar(euler));
        }
        let mut dart_face = vec![FaceId(0); 2 * m];
        for (i, f) in faces.iter().enumerate() {
            for &d in &f.boundary {
                dart_face[d.0] = FaceId(i);
            }
        }
        g.faces = faces;
        g.dart_face = dart_face;

        // Locate and check the outer face.
        let k = outer_cycle.len();
        if k < 3 {
            return Err(GraphError::OuterNotCycle(format!(
                "declared outer cycle has length {k}"
            )));
        }
        let distinct: HashSet<_> = outer_cycle.iter().collect();
        if distinct.len() != k {
            return Err(GraphError::OuterNotCycle(
                "declared outer cycle repeats a vertex".into(),
            ));
        }
        if let Some(&v) = outer_cycle.iter().find(|&&v| v >= n) {
            return Err(GraphError::OuterNotCycle(format!(
                "unknown vertex {}",
                v + 1
            )));
        }
        let start = g
            .dart_between(outer_cycle[0], outer_cycle[1])
            .ok_or_else(|| {
                GraphError::OuterNotCycle(format!(
                    "{} {} is not an edge",
                    outer_cycle[0] + 1,
                    outer_cycle[1] + 1
                ))
            })?;
        let outer_face = g.dart_face[start.0];
        let walk = &g.faces[outer_face.0].boundary;
        let offset = walk.iter().position(|&d| d == start).unwrap();
        let traced: Vec<usize> = (0..walk.len())
            .map(|i| g.tail[walk[(offset + i) % walk.len()].0])
            .collect();
        if traced != outer_cycle {
            return Err(GraphError::OuterNotCycle(format!(
                "face traced from {} -> {} is {}",
                outer_cycle[0] + 1,
                outer_cycle[1] + 1,
                traced
                    .iter()
                    .map(|v| (v + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            )));
        }
        g.faces[outer_face.0].is_outer = true;
        // Re-anchor the outer boundary so it starts at outer_cycle[0].
        g.faces[outer_face.0].boundary.rotate_left(offset);
        g.outer_face = outer_face;

        for f in g.internal_faces() {
            if g.faces[f.0].len() < 4 {
                return Err(GraphError::ShortFace(g.faces[f.0].len()));
            }
        }

        let mut outer_edge_pos = vec![None; m];
        for (i, &d) in g.faces[outer_face.0].boundary.iter().enumerate() {
            outer_edge_pos[d.edge()] = Some(i);
        }
        g.outer_cycle = outer_cycle;
        g.outer_edge_pos = outer_edge_pos;
        Ok(g)
    }

    fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &u in &self.rotation[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == n
    }

    fn find_triangle(&self) -> Option<(usize, usize, usize)> {
        let n = self.vertex_count();
        let mut adj = vec![HashSet::new(); n];
        for (v, nbrs) in self.rotation.iter().enumerate() {
            adj[v].extend(nbrs.iter().copied());
        }
        for (a, around) in adj.iter().enumerate() {
            for &b in &self.rotation[a] {
                if b <= a {
                    continue;
                }
                for &c in &self.rotation[b] {
                    if c > b && around.contains(&c) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Traces the faces of the rotation system. Each dart lies on exactly one
    /// face; faces are listed in order of their smallest dart.
    pub fn trace_faces(&self) -> Vec<Face> {
        let darts = self.dart_count();
        let mut visited = vec![false; darts];
        let mut faces = Vec::new();
        for start in 0..darts {
            if visited[start] {
                continue;
            }
            let mut boundary = Vec::new();
            let mut d = Dart(start);
            while !visited[d.0] {
                visited[d.0] = true;
                boundary.push(d);
                d = self.face_next(d);
            }
            let is_outer =
                !self.faces.is_empty() && self.dart_face.get(start) == Some(&self.outer_face);
            faces.push(Face { boundary, is_outer });
        }
        faces
    }

    /// Next dart along the face on the left of `d`.
    #[inline]
    pub fn face_next(&self, d: Dart) -> Dart {
        self.next_cw(d.twin())
    }

    /// The dart following `d` in clockwise order around its origin.
    #[inline]
    pub fn next_cw(&self, d: Dart) -> Dart {
        let v = self.tail[d.0];
        let darts = &self.vertex_darts[v];
        darts[(self.rot_pos[d.0] + 1) % darts.len()]
    }

    #[inline]
    pub fn prev_cw(&self, d: Dart) -> Dart {
        let v = self.tail[d.0];
        let darts = &self.vertex_darts[v];
        darts[(self.rot_pos[d.0] + darts.len() - 1) % darts.len()]
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.tail.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.tail.len()
    }

    #[inline]
    pub fn tail(&self, d: Dart) -> usize {
        self.tail[d.0]
    }

    #[inline]
    pub fn head(&self, d: Dart) -> usize {
        self.tail[d.0 ^ 1]
    }

    /// Endpoints of edge `e` as `(tail, head)` of its even dart.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        (self.tail[2 * e], self.tail[2 * e + 1])
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn darts_at(&self, v: usize) -> &[Dart] {
        &self.vertex_darts[v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn dart_between(&self, u: usize, v: usize) -> Option<Dart> {
        let i = self.rotation.get(u)?.iter().position(|&w| w == v)?;
        Some(self.vertex_darts[u][i])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.dart_between(u, v).is_some()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f.0]
    }

    pub fn face_len(&self, f: FaceId) -> usize {
        self.faces[f.0].len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// The face on the left of `d`.
    #[inline]
    pub fn left_face(&self, d: Dart) -> FaceId {
        self.dart_face[d.0]
    }

    /// The face on the right of `d`.
    #[inline]
    pub fn right_face(&self, d: Dart) -> FaceId {
        self.dart_face[d.0 ^ 1]
    }

    pub fn outer_face(&self) -> FaceId {
        self.outer_face
    }

    pub fn internal_faces(&self) -> impl Iterator<Item = FaceId> + '_ {
        let outer = self.outer_face;
        (0..self.faces.len())
            .map(FaceId)
            .filter(move |&f| f != outer)
    }

    /// Vertices of the outer cycle in clockwise order.
    pub fn outer_cycle(&self) -> &[usize] {
        &self.outer_cycle
    }

    /// Clockwise darts `c_i -> c_{i+1}` of the outer cycle; the outer face is
    /// on their left.
    pub fn outer_darts(&self) -> &[Dart] {
        &self.faces[self.outer_face.0].boundary
    }

    pub fn is_outer_edge(&self, e: usize) -> bool {
        self.outer_edge_pos[e].is_some()
    }

    /// Index `i` such that edge `e` is `c_i c_{i+1}`.
    pub fn outer_edge_index(&self, e: usize) -> Option<usize> {
        self.outer_edge_pos[e]
    }

    pub fn is_outer_vertex(&self, v: usize) -> bool {
        self.outer_cycle.contains(&v)
    }

    /// Vertex sequence of a face boundary walk.
    pub fn face_vertices(&self, f: FaceId) -> Vec<usize> {
        self.faces[f.0]
            .boundary
            .iter()
            .map(|&d| self.tail(d))
            .collect()
    }

    /// Multiset `S(G)`: sorted lengths of internal faces of length at least 5.
    pub fn face_length_multiset(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self
            .internal_faces()
            .map(|f| self.face_len(f))
            .filter(|&l| l >= 5)
            .collect();
        s.sort_unstable();
        s
    }

    pub fn girth(&self) -> usize {
        let n = self.vertex_count();
        let mut best = usize::MAX;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.rotation[v] {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        parent[u] = v;
                        queue.push_back(u);
                    } else if parent[v] != u {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        best
    }

    /// BFS distance between two vertices.
    pub fn distance(&self, a: usize, b: usize) -> usize {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[a] = 0;
        let mut queue = VecDeque::from([a]);
        while let Some(v) = queue.pop_front() {
            if v == b {
                return dist[v];
            }
            for &u in &self.rotation[v] {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        usize::MAX
    }

    /// Darts `v_i -> v_{i+1}` of a closed vertex sequence, checking that it is
    /// a simple cycle of this graph.
    pub fn cycle_darts(&self, cycle: &[usize]) -> Result<Vec<Dart>, CycleError> {
        if cycle.len() < 3 {
            return Err(CycleError::NotACycle(format!("length {}", cycle.len())));
        }
        let distinct: HashSet<_> = cycle.iter().collect();
        if distinct.len() != cycle.len() {
            return Err(CycleError::NotACycle("repeated vertex".into()));
        }
        (0..cycle.len())
            .map(|i| {
                let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                self.dart_between(a, b).ok_or_else(|| {
                    CycleError::NotACycle(format!("{} {} is not an edge", a + 1, b + 1))
                })
            })
            .collect()
    }

    fn is_outer_cycle(&self, cycle: &[usize]) -> bool {
        if cycle.len() != self.outer_cycle.len() {
            return false;
        }
        let set: HashSet<_> = cycle.iter().collect();
        self.outer_cycle.iter().all(|v| set.contains(v))
            && self
                .cycle_darts(cycle)
                .is_ok_and(|ds| ds.iter().all(|d| self.is_outer_edge(d.edge())))
    }

    /// All internal faces drawn in the closed disk bounded by `cycle`.
    pub fn faces_inside(&self, cycle: &[usize]) -> Result<Vec<FaceId>, CycleError> {
        let darts = self.cycle_darts(cycle)?;
        if self.is_outer_cycle(cycle) {
            return Err(CycleError::IsOuterCycle);
        }
        let on_cycle: HashSet<usize> = darts.iter().map(|d| d.edge()).collect();
        let fill = |seeds: Vec<FaceId>| -> Vec<bool> {
            let mut inside = vec![false; self.faces.len()];
            let mut stack = seeds;
            while let Some(f) = stack.pop() {
                if inside[f.0] {
                    continue;
                }
                inside[f.0] = true;
                for &d in &self.faces[f.0].boundary {
                    if !on_cycle.contains(&d.edge()) {
                        let g = self.right_face(d);
                        if !inside[g.0] {
                            stack.push(g);
                        }
                    }
                }
            }
            inside
        };
        let mut inside = fill(darts.iter().map(|&d| self.left_face(d)).collect());
        if inside[self.outer_face.0] {
            inside = fill(darts.iter().map(|&d| self.right_face(d)).collect());
        }
        debug_assert!(!inside[self.outer_face.0]);
        Ok((0..self.faces.len())
            .filter(|&i| inside[i])
            .map(FaceId)
            .collect())
    }

    /// Whether `cycle` is the boundary of some internal face.
    pub fn is_facial(&self, cycle: &[usize]) -> Result<bool, CycleError> {
        let inside = self.faces_inside(cycle)?;
        Ok(inside.len() == 1 && self.face_len(inside[0]) == cycle.len())
    }

    /// Lengths (sorted) of the faces in the open disk bounded by `cycle`;
    /// empty when `cycle` bounds a face.
    pub fn cycle_interior(&self, cycle: &[usize]) -> Result<Vec<usize>, CycleError> {
        let inside = self.faces_inside(cycle)?;
        if inside.len() == 1 && self.face_len(inside[0]) == cycle.len() {
            return Ok(Vec::new());
        }
        let mut lens: Vec<usize> = inside.iter().map(|&f| self.face_len(f)).collect();
        lens.sort_unstable();
        Ok(lens)
    }

    /// Every simple cycle of length at most `max_len`, each once, as a vertex
    /// sequence starting at its smallest vertex and continuing towards the
    /// smaller of its two neighbours on the cycle.
    pub fn cycles_up_to(&self, max_len: usize) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        let mut path = Vec::with_capacity(max_len);
        let mut on_path = vec![false; n];
        for start in 0..n {
            path.push(start);
            on_path[start] = true;
            self.extend_cycles(start, max_len, &mut path, &mut on_path, &mut out);
            on_path[start] = false;
            path.pop();
        }
        out.sort();
        out
    }

    fn extend_cycles(
        &self,
        start: usize,
        max_len: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        for &u in &self.rotation[last] {
            if u == start && path.len() >= 3 {
                // Each cycle is found in two directions; keep the one whose
                // second vertex is smaller than its last.
                if path[1] < path[path.len() - 1] {
                    out.push(path.clone());
                }
                continue;
            }
            if u <= start || on_path[u] || path.len() >= max_len {
                continue;
            }
            on_path[u] = true;
            path.push(u);
            self.extend_cycles(start, max_len, path, on_path, out);
            path.pop();
            on_path[u] = false;
        }
    }

    /// Non-facial cycles of length at most `max_len`, other than the outer
    /// cycle.
    pub fn separating_cycles_up_to(&self, max_len: usize) -> Vec<Vec<usize>> {
        self.cycles_up_to(max_len)
            .into_iter()
            .filter(|c| !self.is_outer_cycle(c))
            .filter(|c| !self.is_facial(c).expect("enumerated cycles are cycles"))
            .collect()
    }

    /// Subgraph of the outer cycle shared with face `f`: the common vertices
    /// and the outer edges on the boundary of `f`.
    pub fn outer_intersection(&self, f: FaceId) -> (Vec<usize>, Vec<usize>) {
        let mut verts: Vec<usize> = self
            .face_vertices(f)
            .into_iter()
            .filter(|&v| self.is_outer_vertex(v))
            .collect();
        verts.sort_unstable();
        verts.dedup();
        let mut edges: Vec<usize> = self.faces[f.0]
            .boundary
            .iter()
            .map(|d| d.edge())
            .filter(|&e| self.is_outer_edge(e))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        (verts, edges)
    }

    /// Length of the path `f ∩ C`, or `None` when the intersection is empty or
    /// not a single path.
    pub fn outer_intersection_path_len(&self, f: FaceId) -> Option<usize> {
        let (verts, edges) = self.outer_intersection(f);
        if verts.is_empty() {
            return None;
        }
        let k = self.outer_cycle.len();
        if edges.len() >= k {
            return None;
        }
        // A subgraph of a cycle is a path iff it is connected and acyclic,
        // i.e. it has exactly one more vertex than edges and all its edges
        // form one contiguous arc whose ends are its vertices.
        if verts.len() != edges.len() + 1 {
            return None;
        }
        if edges.is_empty() {
            return Some(0);
        }
        let mut on_arc = vec![false; k];
        for &e in &edges {
            on_arc[self.outer_edge_pos[e].unwrap()] = true;
        }
        let runs = (0..k)
            .filter(|&i| on_arc[i] && !on_arc[(i + k - 1) % k])
            .count();
        (runs == 1).then_some(edges.len())
    }

    /// Text in the line-oriented graph format.
    pub fn to_text(&self) -> String {
        let mut s = format!("vertices {}\nouter", self.vertex_count());
        for &v in &self.outer_cycle {
            s.push_str(&format!(" {}", v + 1));
        }
        s.push('\n');
        for (v, nbrs) in self.rotation.iter().enumerate() {
            s.push_str(&format!("rot {}:", v + 1));
            for &u in nbrs {
                s.push_str(&format!(" {}", u + 1));
            }
            s.push('\n');
        }
        s
    }

    /// Parses the line-oriented graph format.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        parse_plane_graph(text)
    }

    /// Builds a graph from a straight-line drawing: clockwise rotations are
    /// obtained by sorting neighbours by angle. `outer` lists the outer cycle
    /// in clockwise order.
    pub fn from_drawing(
        points: &[(f64, f64)],
        edges: &[(usize, usize)],
        outer: &[usize],
    ) -> Result<Self, GraphError> {
        let n = points.len();
        let mut rotation = vec![Vec::new(); n];
        for &(a, b) in edges {
            rotation[a].push(b);
            rotation[b].push(a);
        }
        for (v, nbrs) in rotation.iter_mut().enumerate() {
            let (x0, y0) = points[v];
            nbrs.sort_by(|&a, &b| {
                let ta = (points[a].1 - y0).atan2(points[a].0 - x0);
                let tb = (points[b].1 - y0).atan2(points[b].0 - x0);
                tb.partial_cmp(&ta).unwrap()
            });
        }
        PlaneGraph::new(rotation, outer.to_vec())
    }
}

struct Tokens<'a> {
    line: usize,
    items: Vec<(usize, &'a str)>,
}

fn tokenize(line_no: usize, raw: &str) -> Tokens<'_> {
    let content = match raw.find('#') {
        Some(i) => &raw[..i],
        None => raw,
    };
    let mut items = Vec::new();
    let mut start = None;
    for (i, ch) in content.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                items.push((s + 1, &content[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        items.push((s + 1, &content[s..]));
    }
    Tokens {
        line: line_no,
        items,
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> GraphError {
    GraphError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn parse_vertex(tokens: &Tokens, idx: usize, n: usize) -> Result<usize, GraphError> {
    let (col, tok) = tokens.items[idx];
    let v: usize = tok.parse().map_err(|_| {
        syntax(
            tokens.line,
            col,
            format!("expected a vertex number, found `{tok}`"),
        )
    })?;
    if v == 0 || v > n {
        return Err(syntax(
            tokens.line,
            col,
            format!("vertex {v} out of range 1..={n}"),
        ));
    }
    Ok(v - 1)
}

/// Parses the graph file format and validates every invariant.
pub fn parse_plane_graph(text: &str) -> Result<PlaneGraph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| tokenize(i + 1, l))
        .filter(|t| !t.items.is_empty());

    let header = lines.next().ok_or_else(|| syntax(1, 1, "empty input"))?;
    if header.items[0].1 != "vertices" || header.items.len() != 2 {
        return Err(syntax(
            header.line,
            header.items[0].0,
            "expected `vertices <n>`",
        ));
    }
    let (col, tok) = header.items[1];
    let n: usize = tok.parse().map_err(|_| {
        syntax(
            header.line,
            col,
            format!("expected a vertex count, found `{tok}`"),
        )
    })?;
    if n == 0 {
        return Err(syntax(header.line, col, "vertex count must be positive"));
    }

    let outer_line = lines
        .next()
        .ok_or_else(|| syntax(header.line + 1, 1, "missing `outer` line"))?;
    if outer_line.items[0].1 != "outer" {
        return Err(syntax(
            outer_line.line,
            outer_line.items[0].0,
            "expected `outer <v1> ... <vk>`",
        ));
    }
    let outer = (1..outer_line.items.len())
        .map(|i| parse_vertex(&outer_line, i, n))
        .collect::<Result<Vec<_>, _>>()?;

    let mut rotation: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut last_line = outer_line.line;
    for t in lines {
        last_line = t.line;
        if t.items[0].1 != "rot" {
            return Err(syntax(
                t.line,
                t.items[0].0,
                format!("expected `rot`, found `{}`", t.items[0].1),
            ));
        }
        if t.items.len() < 2 {
            return Err(syntax(t.line, t.items[0].0, "expected `rot <v>: ...`"));
        }
        let (col, tok) = t.items[1];
        let name = tok
            .strip_suffix(':')
            .ok_or_else(|| syntax(t.line, col, "expected `<v>:` after `rot`"))?;
        let v: usize = name.parse().map_err(|_| {
            syntax(
                t.line,
                col,
                format!("expected a vertex number, found `{name}`"),
            )
        })?;
        if v == 0 || v > n {
            return Err(syntax(
                t.line,
                col,
                format!("vertex {v} out of range 1..={n}"),
            ));
        }
        if rotation[v - 1].is_some() {
            return Err(syntax(
                t.line,
                col,
                format!("duplicate rotation for vertex {v}"),
            ));
        }
        let nbrs = (2..t.items.len())
            .map(|i| parse_vertex(&t, i, n))
            .collect::<Result<Vec<_>, _>>()?;
        rotation[v - 1] = Some(nbrs);
    }
    let rotation = rotation
        .into_iter()
        .enumerate()
        .map(|(v, r)| {
            r.ok_or_else(|| {
                syntax(
                    last_line + 1,
                    1,
                    format!("missing rotation for vertex {}", v + 1),
                )
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    PlaneGraph::new(rotation, outer)
}

/// Splits a `---`-separated stream into graphs.
pub fn parse_graph_stream(text: &str) -> Result<Vec<PlaneGraph>, GraphError> {
    let mut chunks = vec![String::new()];
    for line in text.lines() {
        if line.trim() == "---" {
            chunks.push(String::new());
        } else {
            let last = chunks.last_mut().unwrap();
            last.push_str(line);
            last.push('\n');
        }
    }
    chunks
        .iter()
        .filter(|c| {
            c.lines()
                .any(|l| !l.split('#').next().unwrap().trim().is_empty())
        })
        .map(|c| parse_plane_graph(c))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(k: usize) -> PlaneGraph {
        let rotation = (0..k).map(|i| vec![(i + k - 1) % k, (i + 1) % k]).collect();
        PlaneGraph::new(rotation, (0..k).collect()).unwrap()
    }

    const HEX: &str = "vertices 6\nouter 1 2 3 4 5 6\nrot 1: 6 2\nrot 2: 1 3\nrot 3: 2 4\nrot 4: 3 5\nrot 5: 4 6\nrot 6: 5 1\n";

    // v = 7 adjacent to c1, c3, c5. At outer c_i the clockwise order is
    // c_{i-1}, c_{i+1}, then the interior neighbours.
    const HEX_QUAD: &str = "\
vertices 7
outer 1 2 3 4 5 6
rot 1: 6 2 7
rot 2: 1 3
rot 3: 2 4 7
rot 4: 3 5
rot 5: 4 6 7
rot 6: 5 1
rot 7: 1 3 5   # clockwise around the centre
";

    #[test]
    fn parses_hexagon() {
        let g = parse_plane_graph(HEX).unwrap();
        assert_eq!(g.face_count(), 2);
        assert!(g.faces().iter().all(|f| f.len() == 6));
    }

    #[test]
    fn parses_hex_quadrangulation() {
        let g = parse_plane_graph(HEX_QUAD).unwrap();
        let mut lens: Vec<_> = g.internal_faces().map(|f| g.face_len(f)).collect();
        lens.sort();
        assert_eq!(lens, vec![4, 4, 4]);
        assert_eq!(g.face_len(g.outer_face()), 6);
        assert!(g.face_length_multiset().is_empty());
        assert!(g.separating_cycles_up_to(5).is_empty());
    }

    #[test]
    fn rejects_triangle() {
        let text = "vertices 6\nouter 1 2 3 4 5 6\nrot 1: 6 2 3\nrot 2: 1 3\nrot 3: 2 4 1\nrot 4: 3 5\nrot 5: 4 6\nrot 6: 5 1\n";
        let err = parse_plane_graph(text).unwrap_err();
        assert_eq!(err.to_string(), "triangle found: 1 2 3");
    }

    #[test]
    fn reports_syntax_position() {
        let err = parse_plane_graph("vertices 3\nouter 1 2 x\n").unwrap_err();
        assert_eq!(
            err,
            GraphError::Syntax {
                line: 2,
                column: 11,
                message: "expected a vertex number, found `x`".into()
            }
        );
        let err = parse_plane_graph("vertices 4\nouter 1 2 3 4\nedge 1 2\n").unwrap_err();
        assert!(matches!(
            err,
            GraphError::Syntax {
                line: 3,
                column: 1,
                ..
            }
        ));
    }

    #[test]
    fn rejects_disconnected_and_bad_outer() {
        let text = "vertices 8\nouter 1 2 3 4\nrot 1: 4 2\nrot 2: 1 3\nrot 3: 2 4\nrot 4: 3 1\n\
                    rot 5: 8 6\nrot 6: 5 7\nrot 7: 6 8\nrot 8: 7 5\n";
        assert_eq!(
            parse_plane_graph(text).unwrap_err(),
            GraphError::Disconnected
        );
        // counter-clockwise outer declaration traces the inner face instead
        let text = "vertices 4\nouter 1 4 3 2\nrot 1: 4 2\nrot 2: 1 3\nrot 3: 2 4\nrot 4: 3 1\n";
        // for a bare cycle both faces are cycles, so the declaration is accepted
        assert!(parse_plane_graph(text).is_ok());
        let text = "vertices 5\nouter 1 4 3 2\nrot 1: 4 2 5\nrot 2: 1 3\nrot 3: 2 4 5\nrot 4: 3 1\nrot 5: 1 3\n";
        assert!(matches!(
            parse_plane_graph(text),
            Err(GraphError::OuterNotCycle(_))
        ));
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = format!("# a hexagon\n\n{HEX}\n# trailing\n");
        assert!(parse_plane_graph(&text).is_ok());
    }

    #[test]
    fn round_trips_through_text() {
        let g = parse_plane_graph(HEX_QUAD).unwrap();
        let h = parse_plane_graph(&g.to_text()).unwrap();
        assert_eq!(g.rotations(), h.rotations());
        assert_eq!(g.outer_cycle(), h.outer_cycle());
    }

    #[test]
    fn eight_cycle_faces() {
        let g = cycle(8);
        let lens: Vec<_> = g.faces().iter().map(|f| f.len()).collect();
        assert_eq!(lens, vec![8, 8]);
        assert!(g.faces()[g.outer_face().0].is_outer);
    }

    fn c8_chord() -> PlaneGraph {
        let mut rotation: Vec<Vec<usize>> =
            (0..8).map(|i| vec![(i + 7) % 8, (i + 1) % 8]).collect();
        rotation[0].push(4);
        rotation[4].push(0);
        PlaneGraph::new(rotation, (0..8).collect()).unwrap()
    }

    #[test]
    fn chord_splits_into_fives() {
        let g = c8_chord();
        let mut lens: Vec<_> = g.internal_faces().map(|f| g.face_len(f)).collect();
        lens.sort();
        assert_eq!(lens, vec![5, 5]);
        assert_eq!(g.face_length_multiset(), vec![5, 5]);
        assert!(g.separating_cycles_up_to(5).is_empty());
        // the outer cycle is excluded even though it is not facial
        assert!(g.separating_cycles_up_to(8).is_empty());
    }

    #[test]
    fn interior_of_cycles() {
        let g = parse_plane_graph(HEX_QUAD).unwrap();
        assert_eq!(
            g.cycle_interior(&[0, 1, 2, 6]).unwrap(),
            Vec::<usize>::new()
        );
        assert_eq!(g.cycle_interior(&[0, 1, 2, 3, 4, 6]).unwrap(), vec![4, 4]);
        assert_eq!(
            g.cycle_interior(&[0, 1, 2, 3, 4, 5]),
            Err(CycleError::IsOuterCycle)
        );
        assert!(matches!(
            g.cycle_interior(&[0, 1, 3]),
            Err(CycleError::NotACycle(_))
        ));
    }

    #[test]
    fn separating_four_cycle_detected() {
        // Square 1..4 with an inner square 5..8 joined by spokes; the inner
        // square is a separating 4-cycle once it holds a centre vertex 9.
        let points = [
            (-2.0, 2.0),
            (2.0, 2.0),
            (2.0, -2.0),
            (-2.0, -2.0),
            (-1.0, 1.0),
            (1.0, 1.0),
            (1.0, -1.0),
            (-1.0, -1.0),
            (0.0, 0.0),
        ];
        let edges = [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 4),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
            (8, 4),
            (8, 6),
        ];
        let g = PlaneGraph::from_drawing(&points, &edges, &[0, 1, 2, 3]).unwrap();
        assert_eq!(g.separating_cycles_up_to(4), vec![vec![4, 5, 6, 7]]);
        assert_eq!(g.cycle_interior(&[4, 5, 6, 7]).unwrap(), vec![4, 4]);
    }

    #[test]
    fn euler_and_dart_partition() {
        let g = c8_chord();
        let total: usize = g.faces().iter().map(|f| f.len()).sum();
        assert_eq!(total, 2 * g.edge_count());
        assert_eq!(
            g.vertex_count() as i64 - g.edge_count() as i64 + g.face_count() as i64,
            2
        );
    }

    #[test]
    fn intersection_paths() {
        let g = c8_chord();
        for f in g.internal_faces() {
            assert_eq!(g.outer_intersection_path_len(f), Some(4));
        }
        let g = parse_plane_graph(HEX_QUAD).unwrap();
        for f in g.internal_faces() {
            assert_eq!(g.outer_intersection_path_len(f), Some(2));
        }
    }
}
