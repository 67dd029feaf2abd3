//! Induced directed cycles and paths, t-chordality and membership in the
//! class of digraphs with no short induced cycle and no induced path of a
//! given order.
//!
//! A vertex sequence is *induced* when the only arcs among its vertices are
//! the consecutive forward arcs (plus the closing arc, for a cycle).
//!
//! All searches extend induced paths one vertex at a time. For every vertex
//! we keep the number of path vertices adjacent to it, so a candidate `y`
//! after the last vertex `x` is an induced extension iff that count is 1
//! (just `x`), and closes an induced cycle iff the count is 2 and the second
//! neighbor is the start vertex via `y -> start`.

use std::collections::HashMap;
use std::fmt;
use std::ops::ControlFlow;

use crate::digraph::{Digraph, Vertex};
use crate::error::{Error, Result};

/// An induced directed cycle, rotated so its smallest vertex comes first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InducedCycle {
    vertices: Vec<Vertex>,
}

impl InducedCycle {
    /// Validates `vertices` against `d` and stores them in canonical rotation.
    pub fn new(d: &Digraph, vertices: Vec<Vertex>) -> Result<Self> {
        check_cycle(d, &vertices).map_err(Error::InvalidCertificate)?;
        Ok(InducedCycle::canonical(vertices))
    }

    pub(crate) fn canonical(mut vertices: Vec<Vertex>) -> Self {
        if let Some(start) = vertices.iter().enumerate().min_by_key(|&(_, v)| *v).map(|(i, _)| i) {
            vertices.rotate_left(start);
        }
        InducedCycle { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Re-checks the certificate against `d`.
    pub fn check(&self, d: &Digraph) -> std::result::Result<(), String> {
        check_cycle(d, &self.vertices)
    }
}

impl fmt::Display for InducedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cycle {}:", self.vertices.len())?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// An induced directed path `v_1 -> ... -> v_l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InducedPath {
    vertices: Vec<Vertex>,
}

impl InducedPath {
    pub fn new(d: &Digraph, vertices: Vec<Vertex>) -> Result<Self> {
        check_path(d, &vertices).map_err(Error::InvalidCertificate)?;
        Ok(InducedPath { vertices })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn check(&self, d: &Digraph) -> std::result::Result<(), String> {
        check_path(d, &self.vertices)
    }
}

impl fmt::Display for InducedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "path {}:", self.vertices.len())?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

fn check_distinct_in_range(d: &Digraph, vertices: &[Vertex]) -> std::result::Result<(), String> {
    let mut seen = vec![false; d.vertex_count()];
    for &v in vertices {
        if !d.contains_vertex(v) {
            return Err(format!("vertex {v} out of range"));
        }
        if std::mem::replace(&mut seen[v - 1], true) {
            return Err(format!("vertex {v} repeated"));
        }
    }
    Ok(())
}

fn arcs_among(d: &Digraph, vertices: &[Vertex]) -> usize {
    let mut member = vec![false; d.vertex_count()];
    for &v in vertices {
        member[v - 1] = true;
    }
    vertices
        .iter()
        .map(|&v| d.out_neighbors(v).iter().filter(|&&w| member[w - 1]).count())
        .sum()
}

fn check_cycle(d: &Digraph, vertices: &[Vertex]) -> std::result::Result<(), String> {
    let k = vertices.len();
    if k < 3 {
        return Err(format!(
            "a directed cycle in a simple digraph has at least 3 vertices, got {k}"
        ));
    }
    check_distinct_in_range(d, vertices)?;
    for i in 0..k {
        let (u, v) = (vertices[i], vertices[(i + 1) % k]);
        if !d.has_arc(u, v) {
            return Err(format!("missing cycle arc {u} -> {v}"));
        }
    }
    let among = arcs_among(d, vertices);
    if among != k {
        return Err(format!("{} chord(s) among the cycle vertices", among - k));
    }
    Ok(())
}

fn check_path(d: &Digraph, vertices: &[Vertex]) -> std::result::Result<(), String> {
    if vertices.is_empty() {
        return Err("empty path".into());
    }
    check_distinct_in_range(d, vertices)?;
    for pair in vertices.windows(2) {
        if !d.has_arc(pair[0], pair[1]) {
            return Err(format!("missing path arc {} -> {}", pair[0], pair[1]));
        }
    }
    let among = arcs_among(d, vertices);
    if among != vertices.len() - 1 {
        return Err(format!(
            "{} extra arc(s) among the path vertices",
            among + 1 - vertices.len()
        ));
    }
    Ok(())
}

/// Verdict of [`is_t_chordal`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    Chordal,
    /// An induced directed cycle whose length differs from `t`.
    NotChordal(InducedCycle),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal)
    }
}

/// Verdict of [`in_class`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassMembership {
    Member,
    ShortCycle(InducedCycle),
    LongPath(InducedPath),
}

impl ClassMembership {
    pub fn is_member(&self) -> bool {
        matches!(self, ClassMembership::Member)
    }
}

/// Backtracking state shared by the cycle and path searches.
struct InducedSearch<'a> {
    d: &'a Digraph,
    /// Out-neighbors sorted ascending, for reproducible search order.
    out: Vec<Vec<Vertex>>,
    path: Vec<Vertex>,
    on_path: Vec<bool>,
    /// Number of path vertices adjacent (either direction) to each vertex.
    touch: Vec<u32>,
    nodes: u64,
    budget: Option<u64>,
}

impl<'a> InducedSearch<'a> {
    fn new(d: &'a Digraph, budget: Option<u64>) -> Self {
        let out = d
            .vertices()
            .map(|v| {
                let mut list = d.out_neighbors(v).to_vec();
                list.sort_unstable();
                list
            })
            .collect();
        InducedSearch {
            d,
            out,
            path: Vec::new(),
            on_path: vec![false; d.vertex_count()],
            touch: vec![0; d.vertex_count()],
            nodes: 0,
            budget,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        match self.budget {
            Some(budget) if self.nodes > budget => Err(Error::BudgetExceeded {
                required: self.nodes as u128,
                budget,
            }),
            _ => Ok(()),
        }
    }

    fn push(&mut self, v: Vertex) {
        self.path.push(v);
        self.on_path[v - 1] = true;
        for w in self.d.neighbors(v) {
            self.touch[w - 1] += 1;
        }
    }

    fn pop(&mut self) {
        let v = self.path.pop().expect("pop on empty path");
        self.on_path[v - 1] = false;
        for w in self.d.neighbors(v) {
            self.touch[w - 1] -= 1;
        }
    }

    /// Visits every induced cycle with length in `min_len..=max_len`, each
    /// once, starting from its smallest vertex.
    fn cycles(
        &mut self,
        min_len: usize,
        max_len: usize,
        visit: &mut dyn FnMut(&[Vertex]) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        if max_len < 3 || min_len > max_len {
            return Ok(ControlFlow::Continue(()));
        }
        for start in self.d.vertices() {
            self.push(start);
            let mut frames: Vec<usize> = vec![0];
            while let Some(next) = frames.last_mut() {
                let x = *self.path.last().expect("frame without path vertex");
                let Some(&y) = self.out[x - 1].get(*next) else {
                    frames.pop();
                    self.pop();
                    continue;
                };
                *next += 1;
                if y < start || self.on_path[y - 1] {
                    continue;
                }
                let others = self.touch[y - 1] - 1;
                if others == 0 {
                    // Room is needed for y and at least one closing vertex.
                    if self.path.len() + 2 <= max_len {
                        self.tick()?;
                        self.push(y);
                        frames.push(0);
                    }
                } else if others == 1 && self.path.len() >= 2 && self.d.has_arc(y, start) {
                    self.tick()?;
                    let len = self.path.len() + 1;
                    if len >= min_len {
                        self.path.push(y);
                        let flow = visit(&self.path);
                        self.path.pop();
                        if flow.is_break() {
                            while !self.path.is_empty() {
                                self.pop();
                            }
                            return Ok(flow);
                        }
                    }
                }
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    /// First induced path on exactly `len` vertices in search order.
    fn path_of_len(&mut self, len: usize) -> Result<Option<Vec<Vertex>>> {
        if len == 0 {
            return Ok(None);
        }
        for start in self.d.vertices() {
            self.push(start);
            if len == 1 {
                return Ok(Some(std::mem::take(&mut self.path)));
            }
            let mut frames: Vec<usize> = vec![0];
            while let Some(next) = frames.last_mut() {
                let x = *self.path.last().expect("frame without path vertex");
                let Some(&y) = self.out[x - 1].get(*next) else {
                    frames.pop();
                    self.pop();
                    continue;
                };
                *next += 1;
                if self.on_path[y - 1] || self.touch[y - 1] != 1 {
                    continue;
                }
                self.tick()?;
                if self.path.len() + 1 == len {
                    let mut found = self.path.clone();
                    found.push(y);
                    return Ok(Some(found));
                }
                self.push(y);
                frames.push(0);
            }
        }
        Ok(None)
    }
}

/// Every induced directed cycle of length at most `max_length`, in canonical
/// rotation, truncated after `limit` cycles.
pub fn enumerate_induced_dicycles(d: &Digraph, max_length: Option<usize>, limit: Option<usize>) -> Vec<InducedCycle> {
    enumerate_induced_dicycles_with_budget(d, max_length, limit, None).expect("no budget set")
}

/// As [`enumerate_induced_dicycles`], failing with `BudgetExceeded` after
/// `budget` search nodes.
pub fn enumerate_induced_dicycles_with_budget(
    d: &Digraph,
    max_length: Option<usize>,
    limit: Option<usize>,
    budget: Option<u64>,
) -> Result<Vec<InducedCycle>> {
    let mut found = Vec::new();
    if limit == Some(0) {
        return Ok(found);
    }
    let max_len = max_length.unwrap_or(d.vertex_count());
    let _ = InducedSearch::new(d, budget).cycles(3, max_len, &mut |cycle| {
        found.push(InducedCycle {
            vertices: cycle.to_vec(),
        });
        if limit.is_some_and(|limit| found.len() >= limit) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}

/// Calls `visit` on each induced directed cycle (canonical rotation) until
/// it breaks. Returns the number of search nodes used.
pub fn for_each_induced_dicycle(
    d: &Digraph,
    budget: Option<u64>,
    mut visit: impl FnMut(&[Vertex]) -> ControlFlow<()>,
) -> Result<u64> {
    let mut search = InducedSearch::new(d, budget);
    let _ = search.cycles(3, d.vertex_count(), &mut visit)?;
    Ok(search.nodes)
}

/// Decides whether every induced directed cycle of `d` has length `t`.
pub fn is_t_chordal(d: &Digraph, t: usize) -> Result<Chordality> {
    is_t_chordal_with_budget(d, t, None)
}

pub fn is_t_chordal_with_budget(d: &Digraph, t: usize, budget: Option<u64>) -> Result<Chordality> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!("t must be at least 2, got {t}")));
    }
    if t == 2 {
        // Simple digraphs have no 2-cycles, so 2-chordal means acyclic.
        return Ok(match d.find_cycle() {
            None => Chordality::Chordal,
            Some(cycle) => Chordality::NotChordal(InducedCycle::canonical(shorten_to_induced(d, cycle))),
        });
    }
    let mut search = InducedSearch::new(d, budget);
    let mut witness = None;
    let mut grab = |cycle: &[Vertex]| {
        witness = Some(cycle.to_vec());
        ControlFlow::Break(())
    };
    if search.cycles(3, t - 1, &mut grab)?.is_continue() {
        let _ = search.cycles(t + 1, d.vertex_count(), &mut grab)?;
    }
    Ok(match witness {
        None => Chordality::Chordal,
        Some(vertices) => Chordality::NotChordal(InducedCycle { vertices }),
    })
}

/// Replaces a directed cycle by an induced one on a subset of its vertices
/// by repeatedly short-cutting along chords.
pub fn shorten_to_induced(d: &Digraph, mut cycle: Vec<Vertex>) -> Vec<Vertex> {
    'restart: loop {
        let k = cycle.len();
        let position: HashMap<Vertex, usize> = cycle.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        for (i, &u) in cycle.iter().enumerate() {
            let successor = cycle[(i + 1) % k];
            for &w in d.out_neighbors(u) {
                if w == successor {
                    continue;
                }
                if let Some(&j) = position.get(&w) {
                    // Keep u -> w and the cycle arcs from w back around to u.
                    let mut shorter = Vec::with_capacity(k);
                    let mut p = j;
                    while p != i {
                        shorter.push(cycle[p]);
                        p = (p + 1) % k;
                    }
                    shorter.push(u);
                    cycle = shorter;
                    continue 'restart;
                }
            }
        }
        return cycle;
    }
}

/// An induced directed path on exactly `len` vertices, if one exists.
pub fn find_induced_dipath(d: &Digraph, len: usize) -> Result<Option<InducedPath>> {
    find_induced_dipath_with_budget(d, len, None)
}

pub fn find_induced_dipath_with_budget(d: &Digraph, len: usize, budget: Option<u64>) -> Result<Option<InducedPath>> {
    if len == 0 {
        return Err(Error::InvalidParameter("path order must be at least 1".into()));
    }
    Ok(InducedSearch::new(d, budget)
        .path_of_len(len)?
        .map(|vertices| InducedPath { vertices }))
}

/// Membership in the class of digraphs with no induced directed cycle of
/// length below `l` and no induced directed path on exactly `l` vertices.
pub fn in_class(d: &Digraph, l: usize) -> Result<ClassMembership> {
    in_class_with_budget(d, l, None)
}

pub fn in_class_with_budget(d: &Digraph, l: usize, budget: Option<u64>) -> Result<ClassMembership> {
    if l < 2 {
        return Err(Error::InvalidParameter(format!("l must be at least 2, got {l}")));
    }
    let short = enumerate_induced_dicycles_with_budget(d, Some(l - 1), Some(1), budget)?;
    if let Some(cycle) = short.into_iter().next() {
        return Ok(ClassMembership::ShortCycle(cycle));
    }
    Ok(match find_induced_dipath_with_budget(d, l, budget)? {
        Some(path) => ClassMembership::LongPath(path),
        None => ClassMembership::Member,
    })
}
