//! Shortest-augmenting-path maximum flow on small undirected networks.

/// Undirected network with integer capacities. Edge `i` becomes the arc
/// pair `2i` (a -> b) and `2i + 1` (b -> a), both with the full capacity, so
/// the net flow on an edge may go either way.
#[derive(Debug, Clone)]
pub struct UndirectedNetwork {
    nodes: usize,
    ends: Vec<(usize, usize)>,
    cap: Vec<i64>,
}

#[derive(Debug, Clone)]
pub struct FlowResult {
    pub value: i64,
    /// Net flow on each edge, positive in the stored `a -> b` direction.
    pub flow: Vec<i64>,
    /// Nodes reachable from the source in the final residual network.
    pub source_side: Vec<bool>,
}

impl UndirectedNetwork {
    pub fn new(nodes: usize) -> Self {
        Self::with_capacity(nodes, 0)
    }

    pub fn with_capacity(nodes: usize, edges: usize) -> Self {
        UndirectedNetwork {
            nodes,
            ends: Vec::with_capacity(edges),
            cap: Vec::with_capacity(2 * edges),
        }
    }

    pub fn add_edge(&mut self, a: usize, b: usize, capacity: i64) -> usize {
        self.ends.push((a, b));
        self.cap.push(capacity);
        self.cap.push(capacity);
        self.ends.len() - 1
    }

    /// Edmonds-Karp: repeatedly augment along a shortest residual path.
    pub fn max_flow(&self, s: usize, t: usize) -> FlowResult {
        let n = self.nodes;
        let arcs = self.cap.len();
        // arcs grouped by tail, in insertion order
        let mut start = vec![0usize; n + 1];
        for &(a, b) in &self.ends {
            start[a + 1] += 1;
            start[b + 1] += 1;
        }
        for v in 0..n {
            start[v + 1] += start[v];
        }
        let mut fill = start.clone();
        let mut adj = vec![0usize; arcs];
        let mut head = vec![0usize; arcs];
        for (i, &(a, b)) in self.ends.iter().enumerate() {
            adj[fill[a]] = 2 * i;
            fill[a] += 1;
            adj[fill[b]] = 2 * i + 1;
            fill[b] += 1;
            head[2 * i] = b;
            head[2 * i + 1] = a;
        }

        let mut flow = vec![0i64; arcs];
        let mut pred = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        let mut queue = Vec::with_capacity(n);
        let mut value = 0;
        let bfs = |flow: &[i64],
                   pred: &mut [usize],
                   seen: &mut [bool],
                   queue: &mut Vec<usize>,
                   stop: usize| {
            seen.fill(false);
            seen[s] = true;
            queue.clear();
            queue.push(s);
            let mut i = 0;
            while i < queue.len() {
                let v = queue[i];
                i += 1;
                if v == stop {
                    break;
                }
                for &a in &adj[start[v]..start[v + 1]] {
                    let w = head[a];
                    if !seen[w] && self.cap[a] - flow[a] > 0 {
                        seen[w] = true;
                        pred[w] = a;
                        queue.push(w);
                    }
                }
            }
        };
        if s != t {
            loop {
                bfs(&flow, &mut pred, &mut seen, &mut queue, t);
                if !seen[t] {
                    break;
                }
                let mut bottleneck = i64::MAX;
                let mut v = t;
                while v != s {
                    let a = pred[v];
                    bottleneck = bottleneck.min(self.cap[a] - flow[a]);
                    v = head[a ^ 1];
                }
                let mut v = t;
                while v != s {
                    let a = pred[v];
                    flow[a] += bottleneck;
                    flow[a ^ 1] -= bottleneck;
                    v = head[a ^ 1];
                }
                value += bottleneck;
            }
        }
        bfs(&flow, &mut pred, &mut seen, &mut queue, usize::MAX);
        FlowResult {
            value,
            flow: (0..arcs / 2).map(|i| flow[2 * i]).collect(),
            source_side: seen,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_middle_node() {
        let mut net = UndirectedNetwork::new(3);
        net.add_edge(0, 1, 1);
        net.add_edge(0, 1, 1);
        net.add_edge(1, 2, 1);
        net.add_edge(1, 2, 1);
        let r = net.max_flow(0, 2);
        assert_eq!(r.value, 2);
        assert_eq!(r.source_side, vec![true, false, false]);
    }

    #[test]
    fn flow_can_run_against_stored_direction() {
        // s=0, t=3; the middle edge is stored as 2 -> 1 but used 1 -> 2
        let mut net = UndirectedNetwork::new(4);
        net.add_edge(0, 1, 1);
        let mid = net.add_edge(2, 1, 1);
        net.add_edge(2, 3, 1);
        let r = net.max_flow(0, 3);
        assert_eq!(r.value, 1);
        assert_eq!(r.flow[mid], -1);
    }

    #[test]
    fn bottleneck_cut() {
        let mut net = UndirectedNetwork::new(4);
        for _ in 0..3 {
            net.add_edge(0, 1, 1);
            net.add_edge(2, 3, 1);
        }
        net.add_edge(1, 2, 1);
        let r = net.max_flow(0, 3);
        assert_eq!(r.value, 1);
        assert_eq!(r.source_side, vec![true, true, false, false]);
    }

    #[test]
    fn disconnected() {
        let mut net = UndirectedNetwork::new(3);
        net.add_edge(0, 1, 5);
        assert_eq!(net.max_flow(0, 2).value, 0);
    }
}
