//! Simple undirected graphs: the underlying graph of a digraph and the
//! intersection graph of a set family.
//!
//! Vertices are `1..=vertex_count`, same as [`Digraph`](crate::digraph::Digraph).

use crate::digraph::Vertex;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    vertex_count: usize,
    /// Sorted, deduplicated neighbor lists; slot `v - 1` holds N(v).
    adjacency: Vec<Vec<Vertex>>,
}

impl UndirectedGraph {
    pub fn new(vertex_count: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u - 1].push(v);
            adjacency[v - 1].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(UndirectedGraph {
            vertex_count,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<Vertex> {
        1..=self.vertex_count
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v - 1]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v - 1].len()
    }

    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u - 1].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Smallest-last (degeneracy) order: each vertex has at most
    /// `degeneracy` neighbors later in the returned order.
    pub fn degeneracy_order(&self) -> Vec<Vertex> {
        let n = self.vertex_count;
        let mut degree: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        let max_degree = degree.iter().copied().max().unwrap_or(0);
        let mut buckets: Vec<Vec<Vertex>> = vec![Vec::new(); max_degree + 1];
        // Pushed in descending index order so that pops favor small indices.
        for v in (1..=n).rev() {
            buckets[degree[v - 1]].push(v);
        }
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut low = 0;
        while order.len() < n {
            low = low.min(max_degree);
            while buckets[low].is_empty() {
                low += 1;
            }
            let v = buckets[low].pop().expect("non-empty bucket");
            // Stale entries: the vertex moved to a lower bucket or was taken.
            if removed[v - 1] || degree[v - 1] != low {
                continue;
            }
            removed[v - 1] = true;
            order.push(v);
            for &u in self.neighbors(v) {
                if !removed[u - 1] {
                    degree[u - 1] -= 1;
                    buckets[degree[u - 1]].push(u);
                    low = low.min(degree[u - 1]);
                }
            }
        }
        order
    }

    /// Greedy proper coloring along the reverse degeneracy order. Colors are
    /// `1..`, stored at slot `v - 1`. Uses at most degeneracy + 1 colors.
    pub fn proper_coloring(&self) -> Vec<usize> {
        let mut colors = vec![0usize; self.vertex_count];
        let mut taken: Vec<bool> = Vec::new();
        for &v in self.degeneracy_order().iter().rev() {
            taken.clear();
            taken.resize(self.degree(v) + 2, false);
            for &u in self.neighbors(v) {
                let c = colors[u - 1];
                if c != 0 && c < taken.len() {
                    taken[c] = true;
                }
            }
            colors[v - 1] = (1..taken.len()).find(|&c| !taken[c]).expect("free color");
        }
        colors
    }

    /// Exact clique number by branch and bound with a greedy-coloring bound,
    /// rooted at each vertex over its later neighbors in degeneracy order.
    pub fn clique_number(&self) -> usize {
        if self.vertex_count == 0 {
            return 0;
        }
        let order = self.degeneracy_order();
        let mut position = vec![0usize; self.vertex_count];
        for (i, &v) in order.iter().enumerate() {
            position[v - 1] = i;
        }
        let mut best = 1;
        for &v in &order {
            let later: Vec<Vertex> = self
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&u| position[u - 1] > position[v - 1])
                .collect();
            if 1 + later.len() > best {
                self.expand_clique(1, later, &mut best);
            }
        }
        best
    }

    fn expand_clique(&self, size: usize, candidates: Vec<Vertex>, best: &mut usize) {
        if candidates.is_empty() {
            *best = (*best).max(size);
            return;
        }
        let (order, bounds) = self.color_sort(&candidates);
        for idx in (0..order.len()).rev() {
            if size + bounds[idx] <= *best {
                return;
            }
            let v = order[idx];
            let next: Vec<Vertex> = order[..idx]
                .iter()
                .copied()
                .filter(|&u| self.is_adjacent(v, u))
                .collect();
            self.expand_clique(size + 1, next, best);
        }
    }

    /// Greedy sequential coloring of `candidates`; returns the vertices
    /// grouped by color class and, per position, the class number.
    fn color_sort(&self, candidates: &[Vertex]) -> (Vec<Vertex>, Vec<usize>) {
        let mut classes: Vec<Vec<Vertex>> = Vec::new();
        for &v in candidates {
            match classes
                .iter_mut()
                .find(|class| class.iter().all(|&u| !self.is_adjacent(u, v)))
            {
                Some(class) => class.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut order = Vec::with_capacity(candidates.len());
        let mut bounds = Vec::with_capacity(candidates.len());
        for (i, class) in classes.into_iter().enumerate() {
            for v in class {
                order.push(v);
                bounds.push(i + 1);
            }
        }
        (order, bounds)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> UndirectedGraph {
        let edges: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
        UndirectedGraph::new(n, &edges).unwrap()
    }

    fn is_proper(g: &UndirectedGraph, colors: &[usize]) -> bool {
        g.edges().all(|(u, v)| colors[u - 1] != colors[v - 1]) && colors.iter().all(|&c| c >= 1)
    }

    #[test]
    fn coloring_edgeless_uses_one_color() {
        let g = UndirectedGraph::new(5, &[]).unwrap();
        assert_eq!(g.proper_coloring(), vec![1; 5]);
    }

    #[test]
    fn coloring_single_edge_uses_two_colors() {
        let g = UndirectedGraph::new(2, &[(1, 2)]).unwrap();
        let colors = g.proper_coloring();
        assert!(is_proper(&g, &colors));
        assert_eq!(colors.iter().max(), Some(&2));
    }

    #[test]
    fn coloring_c5_is_proper_with_at_most_three() {
        let g = cycle(5);
        let colors = g.proper_coloring();
        assert!(is_proper(&g, &colors));
        assert!(colors.iter().max().copied().unwrap() <= 3);
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(UndirectedGraph::new(0, &[]).unwrap().clique_number(), 0);
        assert_eq!(UndirectedGraph::new(4, &[]).unwrap().clique_number(), 1);
        assert_eq!(cycle(3).clique_number(), 3);
        assert_eq!(cycle(4).clique_number(), 2);
        let k5: Vec<_> = (1..=5).flat_map(|u| (u + 1..=5).map(move |v| (u, v))).collect();
        assert_eq!(UndirectedGraph::new(5, &k5).unwrap().clique_number(), 5);
    }

    #[test]
    fn degeneracy_order_is_a_permutation() {
        let g = cycle(7);
        let mut order = g.degeneracy_order();
        order.sort_unstable();
        assert_eq!(order, (1..=7).collect::<Vec<_>>());
    }

    #[test]
    fn rejects_self_loop_and_range() {
        assert_eq!(UndirectedGraph::new(2, &[(2, 2)]), Err(Error::SelfLoop(2)));
        assert!(matches!(
            UndirectedGraph::new(2, &[(1, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
    }
}
