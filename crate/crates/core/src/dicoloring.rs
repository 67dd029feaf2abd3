//! Dicolorings: vertex colorings whose color classes induce acyclic
//! subdigraphs. Exact dichromatic number by backtracking, and labeled
//! enumeration of every k-dicoloring.

use std::fmt;
use std::ops::ControlFlow;

use crate::chordality::InducedCycle;
use crate::digraph::{Digraph, Vertex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dicoloring {
    k: usize,
    /// Slot `v - 1` holds the color of `v`, in `1..=k`.
    colors: Vec<usize>,
}

impl Dicoloring {
    pub fn new(k: usize, colors: Vec<usize>) -> Self {
        Dicoloring { k, colors }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn color(&self, v: Vertex) -> usize {
        self.colors[v - 1]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Number of distinct colors on `vertices`.
    pub fn distinct_colors_on(&self, vertices: &[Vertex]) -> usize {
        distinct_colors(&self.colors, vertices)
    }
}

pub(crate) fn distinct_colors(colors: &[usize], vertices: &[Vertex]) -> usize {
    let mut seen: Vec<usize> = vertices.iter().map(|&v| colors[v - 1]).collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

impl fmt::Display for Dicoloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={};", self.k)?;
        for (i, c) in self.colors.iter().enumerate() {
            write!(f, " {}:{}", i + 1, c)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringCheck {
    Valid,
    /// A directed cycle inside one color class (not necessarily induced),
    /// rotated to start at its smallest vertex.
    MonochromaticCycle(Vec<Vertex>),
}

impl ColoringCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, ColoringCheck::Valid)
    }
}

pub fn verify_dicoloring(d: &Digraph, coloring: &Dicoloring) -> Result<ColoringCheck> {
    for v in d.vertices() {
        match coloring.colors.get(v - 1).copied() {
            None | Some(0) => return Err(Error::UncoloredVertex(v)),
            Some(c) if c > coloring.k => {
                return Err(Error::ColorOutOfRange {
                    vertex: v,
                    color: c,
                    k: coloring.k,
                })
            }
            Some(_) => {}
        }
    }
    for c in 1..=coloring.k {
        if let Some(cycle) = d.find_cycle_within(|v| coloring.color(v) == c) {
            let canonical = InducedCycle::canonical(cycle);
            return Ok(ColoringCheck::MonochromaticCycle(canonical.vertices().to_vec()));
        }
    }
    Ok(ColoringCheck::Valid)
}

/// Incremental acyclicity test for backtracking: would coloring `v` with
/// `color` close a directed cycle inside that color class?
struct ClassCycleTest<'a> {
    d: &'a Digraph,
    stamp: Vec<u32>,
    generation: u32,
    stack: Vec<Vertex>,
}

impl<'a> ClassCycleTest<'a> {
    fn new(d: &'a Digraph) -> Self {
        ClassCycleTest {
            d,
            stamp: vec![0; d.vertex_count()],
            generation: 0,
            stack: Vec::new(),
        }
    }

    fn closes_cycle(&mut self, colors: &[usize], v: Vertex, color: usize) -> bool {
        let same = |u: Vertex| colors[u - 1] == color;
        if !self.d.in_neighbors(v).iter().any(|&u| same(u)) {
            return false;
        }
        self.generation += 1;
        self.stack.clear();
        for &w in self.d.out_neighbors(v) {
            if same(w) {
                self.stamp[w - 1] = self.generation;
                self.stack.push(w);
            }
        }
        while let Some(u) = self.stack.pop() {
            for &w in self.d.out_neighbors(u) {
                if w == v {
                    return true;
                }
                if same(w) && self.stamp[w - 1] != self.generation {
                    self.stamp[w - 1] = self.generation;
                    self.stack.push(w);
                }
            }
        }
        false
    }
}

/// Some k-dicoloring of `d`, or `None`. Vertices are branched in order of
/// decreasing degree; a new color is only ever the lowest unused one.
pub fn is_k_dicolorable(d: &Digraph, k: usize) -> Option<Dicoloring> {
    let n = d.vertex_count();
    if n == 0 {
        return Some(Dicoloring::new(k, Vec::new()));
    }
    if k == 0 {
        return None;
    }
    let mut order: Vec<Vertex> = d.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(d.degree(v)), v));

    let mut test = ClassCycleTest::new(d);
    let mut colors = vec![0usize; n];
    // next_try[i]: next color to try at depth i; used[i]: colors in use
    // among order[..i].
    let mut next_try = vec![1usize; n + 1];
    let mut used = vec![0usize; n + 1];
    let mut depth = 0;
    loop {
        if depth == n {
            return Some(Dicoloring::new(k, colors));
        }
        let v = order[depth];
        let ceiling = k.min(used[depth] + 1);
        colors[v - 1] = 0;
        let mut chosen = None;
        for c in next_try[depth]..=ceiling {
            if !test.closes_cycle(&colors, v, c) {
                chosen = Some(c);
                break;
            }
        }
        match chosen {
            Some(c) => {
                colors[v - 1] = c;
                next_try[depth] = c + 1;
                used[depth + 1] = used[depth].max(c);
                depth += 1;
                next_try[depth] = 1;
            }
            None => {
                if depth == 0 {
                    return None;
                }
                depth -= 1;
            }
        }
    }
}

/// Exact dichromatic number with a witness coloring. Each strongly connected
/// component is solved on its own and the colorings are merged.
pub fn dichromatic_number(d: &Digraph) -> (usize, Dicoloring) {
    let n = d.vertex_count();
    let mut colors = vec![0usize; n];
    let mut best = 0;
    for component in d.strongly_connected_components() {
        if component.len() == 1 {
            colors[component[0] - 1] = 1;
            best = best.max(1);
            continue;
        }
        let sub = d
            .induced_subdigraph(&component)
            .expect("component vertices are in range");
        let (k, coloring) = (2..)
            .find_map(|k| is_k_dicolorable(&sub.digraph, k).map(|c| (k, c)))
            .expect("n colors always suffice");
        for (i, &v) in sub.embedding.images().iter().enumerate() {
            colors[v - 1] = coloring.colors[i];
        }
        best = best.max(k);
    }
    (best, Dicoloring::new(best, colors))
}

/// Visits every labeled k-dicoloring of `d` (slot `v - 1` holds the color of
/// `v`) until the visitor breaks. Returns the number of colorings visited.
/// Fails before searching when `k^n` exceeds `budget`.
pub fn enumerate_k_dicolorings(
    d: &Digraph,
    k: usize,
    budget: u64,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> Result<u64> {
    let n = d.vertex_count();
    let required = assignment_count(k, n);
    if required > budget as u128 {
        return Err(Error::BudgetExceeded { required, budget });
    }
    if n == 0 {
        let _ = visit(&[]);
        return Ok(1);
    }
    if k == 0 {
        return Ok(0);
    }
    let mut test = ClassCycleTest::new(d);
    let mut colors = vec![0usize; n];
    let mut next_try = vec![1usize; n + 1];
    let mut visited = 0u64;
    let mut depth = 0usize;
    loop {
        if depth == n {
            visited += 1;
            if visit(&colors).is_break() {
                return Ok(visited);
            }
            depth -= 1;
            continue;
        }
        let v = depth + 1;
        colors[v - 1] = 0;
        let mut chosen = None;
        for c in next_try[depth]..=k {
            if !test.closes_cycle(&colors, v, c) {
                chosen = Some(c);
                break;
            }
        }
        match chosen {
            Some(c) => {
                colors[v - 1] = c;
                next_try[depth] = c + 1;
                depth += 1;
                next_try[depth] = 1;
            }
            None => {
                if depth == 0 {
                    return Ok(visited);
                }
                depth -= 1;
            }
        }
    }
}

/// `k^n`, saturating.
pub fn assignment_count(k: usize, n: usize) -> u128 {
    let mut total: u128 = 1;
    for _ in 0..n {
        total = total.saturating_mul(k as u128);
        if total == 0 || total == u128::MAX {
            break;
        }
    }
    total
}
