//! Simple digraphs: no self-loops and never both `u -> v` and `v -> u`.
//!
//! Vertices are numbered `1..=vertex_count` everywhere, including in the
//! `dgf` text format:
//!
//! ```text
//! c a directed triangle
//! p dgf 3 3
//! a 1 2
//! a 2 3
//! a 3 1
//! ```

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::undirected::UndirectedGraph;

/// A 1-based vertex index.
pub type Vertex = usize;

#[derive(Debug, Clone)]
pub struct Digraph {
    vertex_count: usize,
    /// Arcs in first-insertion order; the order is kept for stable output.
    arcs: Vec<(Vertex, Vertex)>,
    out: Vec<Vec<Vertex>>,
    inn: Vec<Vec<Vertex>>,
    arc_set: HashSet<(Vertex, Vertex)>,
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.arc_set == other.arc_set
    }
}

impl Eq for Digraph {}

impl Digraph {
    /// Builds a simple digraph. Repeated arcs are collapsed.
    pub fn new(vertex_count: usize, arcs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut d = Digraph::empty(vertex_count);
        for (u, v) in arcs {
            d.try_add_arc(u, v)?;
        }
        Ok(d)
    }

    /// The arcless digraph on `vertex_count` vertices.
    pub fn empty(vertex_count: usize) -> Self {
        Digraph {
            vertex_count,
            arcs: Vec::new(),
            out: vec![Vec::new(); vertex_count],
            inn: vec![Vec::new(); vertex_count],
            arc_set: HashSet::new(),
        }
    }

    /// The directed cycle `1 -> 2 -> ... -> len -> 1`.
    pub fn directed_cycle(len: usize) -> Self {
        assert!(len >= 3, "a simple directed cycle needs at least 3 vertices");
        Digraph::new(len, (1..=len).map(|i| (i, i % len + 1))).expect("cycle is simple")
    }

    /// The directed path `1 -> 2 -> ... -> len`.
    pub fn directed_path(len: usize) -> Self {
        Digraph::new(len, (1..len).map(|i| (i, i + 1))).expect("path is simple")
    }

    pub(crate) fn try_add_arc(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        for w in [u, v] {
            if w == 0 || w > self.vertex_count {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    vertex_count: self.vertex_count,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.arc_set.contains(&(v, u)) {
            return Err(Error::Digon(u, v));
        }
        if !self.arc_set.insert((u, v)) {
            return Ok(false);
        }
        self.arcs.push((u, v));
        self.out[u - 1].push(v);
        self.inn[v - 1].push(u);
        Ok(true)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_count == 0
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<Vertex> {
        1..=self.vertex_count
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        (1..=self.vertex_count).contains(&v)
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.arc_set.contains(&(u, v))
    }

    /// True if there is an arc between `u` and `v` in either direction.
    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out[v - 1]
    }

    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.inn[v - 1]
    }

    /// In- and out-neighbors of `v`.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.out[v - 1].iter().chain(&self.inn[v - 1]).copied()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.out[v - 1].len() + self.inn[v - 1].len()
    }

    pub fn underlying_graph(&self) -> UndirectedGraph {
        UndirectedGraph::new(self.vertex_count, &self.arcs).expect("digraph arcs are valid edges")
    }

    /// Exact clique number of the underlying undirected graph.
    pub fn underlying_clique_number(&self) -> usize {
        self.underlying_graph().clique_number()
    }

    /// Kahn's algorithm; `None` if the digraph has a directed cycle.
    pub fn topological_order(&self) -> Option<Vec<Vertex>> {
        let mut indegree: Vec<usize> = self.inn.iter().map(Vec::len).collect();
        let mut ready: Vec<Vertex> = self.vertices().rev().filter(|&v| indegree[v - 1] == 0).collect();
        let mut order = Vec::with_capacity(self.vertex_count);
        while let Some(v) = ready.pop() {
            order.push(v);
            for &w in self.out_neighbors(v) {
                indegree[w - 1] -= 1;
                if indegree[w - 1] == 0 {
                    ready.push(w);
                }
            }
        }
        (order.len() == self.vertex_count).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Some directed cycle, not necessarily induced.
    pub fn find_cycle(&self) -> Option<Vec<Vertex>> {
        self.find_cycle_within(|_| true)
    }

    /// Some directed cycle of the subdigraph induced on the vertices
    /// accepted by `keep`, found by iterative depth-first search.
    pub fn find_cycle_within(&self, keep: impl Fn(Vertex) -> bool) -> Option<Vec<Vertex>> {
        const WHITE: u8 = 0;
        const GRAY: u8 = 1;
        const BLACK: u8 = 2;
        let mut state = vec![WHITE; self.vertex_count];
        let mut stack: Vec<(Vertex, usize)> = Vec::new();
        for root in self.vertices() {
            if state[root - 1] != WHITE || !keep(root) {
                continue;
            }
            state[root - 1] = GRAY;
            stack.push((root, 0));
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                let out = self.out_neighbors(v);
                if *next == out.len() {
                    state[v - 1] = BLACK;
                    stack.pop();
                    continue;
                }
                let w = out[*next];
                *next += 1;
                if !keep(w) {
                    continue;
                }
                match state[w - 1] {
                    WHITE => {
                        state[w - 1] = GRAY;
                        stack.push((w, 0));
                    }
                    GRAY => {
                        let start = stack.iter().position(|&(u, _)| u == w).expect("gray vertex on stack");
                        return Some(stack[start..].iter().map(|&(u, _)| u).collect());
                    }
                    _ => {}
                }
            }
        }
        None
    }

    /// Strongly connected components (iterative Tarjan). Each component is
    /// sorted, and components are ordered by their smallest member.
    pub fn strongly_connected_components(&self) -> Vec<Vec<Vertex>> {
        let n = self.vertex_count;
        const UNVISITED: usize = usize::MAX;
        let mut index = vec![UNVISITED; n];
        let mut low = vec![0usize; n];
        let mut on_stack = vec![false; n];
        let mut stack: Vec<Vertex> = Vec::new();
        let mut call: Vec<(Vertex, usize)> = Vec::new();
        let mut counter = 0;
        let mut components = Vec::new();

        for root in self.vertices() {
            if index[root - 1] != UNVISITED {
                continue;
            }
            call.push((root, 0));
            index[root - 1] = counter;
            low[root - 1] = counter;
            counter += 1;
            stack.push(root);
            on_stack[root - 1] = true;

            while let Some(&mut (v, ref mut next)) = call.last_mut() {
                let out = &self.out[v - 1];
                if *next < out.len() {
                    let w = out[*next];
                    *next += 1;
                    if index[w - 1] == UNVISITED {
                        index[w - 1] = counter;
                        low[w - 1] = counter;
                        counter += 1;
                        stack.push(w);
                        on_stack[w - 1] = true;
                        call.push((w, 0));
                    } else if on_stack[w - 1] {
                        low[v - 1] = low[v - 1].min(index[w - 1]);
                    }
                    continue;
                }
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent - 1] = low[parent - 1].min(low[v - 1]);
                }
                if low[v - 1] == index[v - 1] {
                    let mut component = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w - 1] = false;
                        component.push(w);
                        if w == v {
                            break;
                        }
                    }
                    component.sort_unstable();
                    components.push(component);
                }
            }
        }
        components.sort_unstable_by_key(|c| c[0]);
        components
    }

    /// The subdigraph induced on `vertices`. New vertex `i` is the `i`-th
    /// smallest selected vertex.
    pub fn induced_subdigraph(&self, vertices: &[Vertex]) -> Result<InducedSubdigraph> {
        let mut original: Vec<Vertex> = vertices.to_vec();
        original.sort_unstable();
        original.dedup();
        if let Some(&v) = original.iter().find(|&&v| !self.contains_vertex(v)) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            });
        }
        let mut relabel = vec![0usize; self.vertex_count];
        for (i, &v) in original.iter().enumerate() {
            relabel[v - 1] = i + 1;
        }
        let mut digraph = Digraph::empty(original.len());
        for &(u, v) in &self.arcs {
            let (a, b) = (relabel[u - 1], relabel[v - 1]);
            if a != 0 && b != 0 {
                digraph.try_add_arc(a, b).expect("induced arcs are simple");
            }
        }
        Ok(InducedSubdigraph {
            digraph,
            embedding: Embedding::new(original),
        })
    }

    /// Disjoint union; part `i` is shifted by `offsets[i]`.
    pub fn disjoint_union(parts: &[&Digraph]) -> (Digraph, Vec<usize>) {
        let mut offsets = Vec::with_capacity(parts.len());
        let mut total = 0;
        for part in parts {
            offsets.push(total);
            total += part.vertex_count;
        }
        let mut union = Digraph::empty(total);
        for (part, &offset) in parts.iter().zip(&offsets) {
            for &(u, v) in &part.arcs {
                union
                    .try_add_arc(u + offset, v + offset)
                    .expect("shifted arcs are simple");
            }
        }
        (union, offsets)
    }

    /// `copies` disjoint copies of `self`; copy `j` (0-based) is shifted by
    /// `j * vertex_count`.
    pub fn repeat(&self, copies: usize) -> Digraph {
        let parts: Vec<&Digraph> = std::iter::repeat_n(self, copies).collect();
        Digraph::disjoint_union(&parts).0
    }

    /// Renders the digraph in `dgf` format, arcs in insertion order.
    pub fn to_dgf(&self) -> String {
        let mut text = String::with_capacity(16 + 12 * self.arcs.len());
        writeln!(text, "p dgf {} {}", self.vertex_count, self.arcs.len()).unwrap();
        for &(u, v) in &self.arcs {
            writeln!(text, "a {u} {v}").unwrap();
        }
        text
    }

    /// Parses the `dgf` format. Blank lines and `c` lines are skipped; the
    /// `p` line must precede every `a` line and its arc count must match.
    pub fn from_dgf(text: &str) -> Result<Digraph> {
        let mut digraph: Option<Digraph> = None;
        let mut declared_arcs = 0usize;
        let mut seen_arcs = 0usize;
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            last_line = line;
            let mut fields = raw.split_whitespace();
            let Some(tag) = fields.next() else { continue };
            match tag {
                "c" => {}
                "p" => {
                    if digraph.is_some() {
                        return Err(Error::parse(line, "duplicate problem line"));
                    }
                    if fields.next() != Some("dgf") {
                        return Err(Error::parse(line, "expected \"p dgf <n> <m>\""));
                    }
                    let n = parse_number(fields.next(), line, "vertex count")?;
                    declared_arcs = parse_number(fields.next(), line, "arc count")?;
                    expect_end(fields, line)?;
                    digraph = Some(Digraph::empty(n));
                }
                "a" => {
                    let d = digraph
                        .as_mut()
                        .ok_or_else(|| Error::parse(line, "arc before problem line"))?;
                    let u = parse_number(fields.next(), line, "arc tail")?;
                    let v = parse_number(fields.next(), line, "arc head")?;
                    expect_end(fields, line)?;
                    d.try_add_arc(u, v).map_err(|e| Error::parse(line, e.to_string()))?;
                    seen_arcs += 1;
                }
                other => return Err(Error::parse(line, format!("unknown line type {other:?}"))),
            }
        }
        let digraph = digraph.ok_or_else(|| Error::parse(last_line.max(1), "missing problem line"))?;
        if seen_arcs != declared_arcs {
            return Err(Error::parse(
                last_line,
                format!("problem line declares {declared_arcs} arcs, found {seen_arcs}"),
            ));
        }
        Ok(digraph)
    }
}

pub(crate) fn parse_number(field: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let field = field.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    field
        .parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} {field:?}")))
}

fn expect_end<'a>(mut fields: impl Iterator<Item = &'a str>, line: usize) -> Result<()> {
    match fields.next() {
        None => Ok(()),
        Some(extra) => Err(Error::parse(line, format!("unexpected trailing field {extra:?}"))),
    }
}

/// Images of the vertices `1..=n` of a source digraph inside a host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    images: Vec<Vertex>,
}

impl Embedding {
    pub fn new(images: Vec<Vertex>) -> Self {
        Embedding { images }
    }

    pub fn identity(n: usize) -> Self {
        Embedding::new((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, v: Vertex) -> Vertex {
        self.images[v - 1]
    }

    pub fn images(&self) -> &[Vertex] {
        &self.images
    }

    pub fn image_of_set(&self, set: &[Vertex]) -> Vec<Vertex> {
        set.iter().map(|&v| self.image(v)).collect()
    }

    pub fn shifted(&self, offset: usize) -> Embedding {
        Embedding::new(self.images.iter().map(|&v| v + offset).collect())
    }

    /// `self` followed by `outer`: maps `v` to `outer.image(self.image(v))`.
    pub fn then(&self, outer: &Embedding) -> Embedding {
        Embedding::new(self.images.iter().map(|&v| outer.image(v)).collect())
    }

    /// Checks that the images are distinct host vertices and that the image
    /// is an induced copy of `source`.
    pub fn check(&self, source: &Digraph, host: &Digraph) -> std::result::Result<(), String> {
        if self.images.len() != source.vertex_count() {
            return Err(format!(
                "embedding has {} images for {} source vertices",
                self.images.len(),
                source.vertex_count()
            ));
        }
        let mut seen = HashSet::with_capacity(self.images.len());
        for &v in &self.images {
            if !host.contains_vertex(v) {
                return Err(format!("image {v} is not a host vertex"));
            }
            if !seen.insert(v) {
                return Err(format!("image {v} used twice"));
            }
        }
        for a in source.vertices() {
            for b in source.vertices() {
                if a != b && source.has_arc(a, b) != host.has_arc(self.image(a), self.image(b)) {
                    return Err(format!("arc {a} -> {b} not preserved exactly"));
                }
            }
        }
        Ok(())
    }

    pub fn is_induced_copy(&self, source: &Digraph, host: &Digraph) -> bool {
        self.check(source, host).is_ok()
    }
}

/// An induced subdigraph together with its embedding back into the parent.
#[derive(Debug, Clone)]
pub struct InducedSubdigraph {
    pub digraph: Digraph,
    /// New vertex `i` maps to the parent vertex `embedding.image(i)`.
    pub embedding: Embedding,
}

impl InducedSubdigraph {
    /// The new index of a parent vertex, if it was selected.
    pub fn relabel(&self, parent_vertex: Vertex) -> Option<Vertex> {
        self.embedding
            .images()
            .binary_search(&parent_vertex)
            .ok()
            .map(|i| i + 1)
    }
}
