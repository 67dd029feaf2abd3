//! The amplifier construction and the hard sequence built from it.
//!
//! Given a t-chordal digraph `D` with dichromatic number `k` and a family of
//! independent sets, [`amplify`] produces a t-chordal digraph `D'` in which
//! every k-dicoloring leaves some tracked copy of `D` with every set image
//! missing a color. The recursion:
//!
//! 1. properly color the intersection graph of the family;
//! 2. take one color class `I_1, ..., I_q` (pairwise disjoint sets);
//! 3. for each `I_i` in turn, take `t` copies of the current digraph and
//!    join the union of all tracked images of `I_i` in copy `j` to the same
//!    union in copy `j + 1 (mod t)` with every possible arc;
//! 4. recurse on the result with the images of the remaining sets in every
//!    tracked copy, which inherit their original colors, so each level
//!    removes one color.
//!
//! Sizes grow like `t^(number of wiring rounds)` and the number of rounds
//! itself grows geometrically with the depth, so every entry point takes a
//! vertex cap.

use std::fmt::Write as _;
use std::ops::ControlFlow;

use crate::dicoloring::{dichromatic_number, distinct_colors, enumerate_k_dicolorings, Dicoloring};
use crate::digraph::{Digraph, Embedding, Vertex};
use crate::error::{Error, Result};
use crate::undirected::UndirectedGraph;

/// Default bound on the number of transversal sets materialized by
/// [`build_hard_sequence`].
pub const DEFAULT_FAMILY_CAP: usize = 1_000_000;

/// A list of independent sets of a host digraph. Each set is sorted and
/// free of repeats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentSetFamily {
    sets: Vec<Vec<Vertex>>,
}

impl IndependentSetFamily {
    pub fn new(host: &Digraph, sets: Vec<Vec<Vertex>>) -> Result<Self> {
        let sets: Vec<Vec<Vertex>> = sets
            .into_iter()
            .map(|mut set| {
                set.sort_unstable();
                set.dedup();
                set
            })
            .collect();
        let family = IndependentSetFamily { sets };
        family.check(host)?;
        Ok(family)
    }

    pub fn empty() -> Self {
        IndependentSetFamily { sets: Vec::new() }
    }

    /// Every set lies in the host and spans no arc.
    pub fn check(&self, host: &Digraph) -> Result<()> {
        for (i, set) in self.sets.iter().enumerate() {
            if let Some(&v) = set.iter().find(|&&v| !host.contains_vertex(v)) {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertex_count: host.vertex_count(),
                });
            }
            if let Some((tail, head)) = spanned_arc(host, set) {
                return Err(Error::NotIndependent { set: i + 1, tail, head });
            }
        }
        Ok(())
    }

    pub fn sets(&self) -> &[Vec<Vertex>] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Parses a sets file: one `s <v1> <v2> ...` line per set; blank lines
    /// and `c` lines are skipped.
    pub fn from_sets_text(text: &str, host: &Digraph) -> Result<Self> {
        let mut sets = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let mut fields = raw.split_whitespace();
            match fields.next() {
                None | Some("c") => continue,
                Some("s") => {}
                Some(other) => return Err(Error::parse(line, format!("unknown line type {other:?}"))),
            }
            let mut set = Vec::new();
            for field in fields {
                let v: Vertex = field
                    .parse()
                    .map_err(|_| Error::parse(line, format!("invalid vertex {field:?}")))?;
                if !host.contains_vertex(v) {
                    return Err(Error::parse(
                        line,
                        format!("vertex {v} out of range 1..={}", host.vertex_count()),
                    ));
                }
                set.push(v);
            }
            sets.push(set);
        }
        IndependentSetFamily::new(host, sets)
    }

    pub fn to_sets_text(&self) -> String {
        let mut text = String::new();
        for set in &self.sets {
            text.push('s');
            for v in set {
                write!(text, " {v}").unwrap();
            }
            text.push('\n');
        }
        text
    }
}

/// Some arc with both ends in `set`, if any.
fn spanned_arc(host: &Digraph, set: &[Vertex]) -> Option<(Vertex, Vertex)> {
    let mut member = vec![false; host.vertex_count()];
    for &v in set {
        member[v - 1] = true;
    }
    set.iter()
        .find_map(|&u| host.out_neighbors(u).iter().find(|&&w| member[w - 1]).map(|&w| (u, w)))
}

/// Intersection graph: vertex `i` is set `i`, and two sets are adjacent iff
/// they share a vertex.
pub fn intersection_graph(family: &IndependentSetFamily) -> UndirectedGraph {
    intersection_graph_of(&family.sets)
}

fn intersection_graph_of(sets: &[Vec<Vertex>]) -> UndirectedGraph {
    let max_vertex = sets.iter().flatten().copied().max().unwrap_or(0);
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); max_vertex + 1];
    for (i, set) in sets.iter().enumerate() {
        for &v in set {
            containing[v].push(i + 1);
        }
    }
    let mut edges = Vec::new();
    for members in &containing {
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                if i != j {
                    edges.push((i, j));
                }
            }
        }
    }
    UndirectedGraph::new(sets.len(), &edges).expect("set indices are in range")
}

/// Result of [`amplify`].
#[derive(Debug, Clone)]
pub struct AmplifierOutput {
    /// The input digraph.
    pub base: Digraph,
    /// The input family.
    pub family: IndependentSetFamily,
    pub result: Digraph,
    /// Pairwise disjoint induced copies of `base` in `result`.
    pub copies: Vec<Embedding>,
    /// `set_images[c][j]`: image of set `j` under copy `c`.
    pub set_images: Vec<Vec<Vec<Vertex>>>,
}

impl AmplifierOutput {
    fn new(base: Digraph, family: IndependentSetFamily, result: Digraph, copies: Vec<Embedding>) -> Self {
        let set_images = copies
            .iter()
            .map(|copy| family.sets.iter().map(|set| copy.image_of_set(set)).collect())
            .collect();
        AmplifierOutput {
            base,
            family,
            result,
            copies,
            set_images,
        }
    }

    /// Companion map: `copy <c>: <images>` then `set <c> <j>: <vertices>`,
    /// all indices 1-based.
    pub fn map_text(&self) -> String {
        let mut text = String::new();
        for (c, copy) in self.copies.iter().enumerate() {
            write!(text, "copy {}:", c + 1).unwrap();
            for v in copy.images() {
                write!(text, " {v}").unwrap();
            }
            text.push('\n');
        }
        for (c, images) in self.set_images.iter().enumerate() {
            for (j, image) in images.iter().enumerate() {
                write!(text, "set {} {}:", c + 1, j + 1).unwrap();
                for v in image {
                    write!(text, " {v}").unwrap();
                }
                text.push('\n');
            }
        }
        text
    }

    /// Re-checks the tracked bookkeeping: every copy is an induced copy of
    /// `base`, copies are pairwise disjoint, and every set image is the
    /// image of its set.
    pub fn check(&self) -> std::result::Result<(), String> {
        let mut owner = vec![0usize; self.result.vertex_count()];
        for (c, copy) in self.copies.iter().enumerate() {
            copy.check(&self.base, &self.result)
                .map_err(|e| format!("copy {}: {e}", c + 1))?;
            for &v in copy.images() {
                if owner[v - 1] != 0 {
                    return Err(format!("copies {} and {} share vertex {v}", owner[v - 1], c + 1));
                }
                owner[v - 1] = c + 1;
            }
        }
        if self.set_images.len() != self.copies.len() {
            return Err("set image table does not match the copy list".into());
        }
        for (c, (copy, images)) in self.copies.iter().zip(&self.set_images).enumerate() {
            for (j, (set, image)) in self.family.sets.iter().zip(images).enumerate() {
                if copy.image_of_set(set) != *image {
                    return Err(format!("set {} image in copy {} is wrong", j + 1, c + 1));
                }
            }
        }
        Ok(())
    }
}

/// Builds the amplified digraph for `d` and `family` with wiring cycles of
/// length `t`. Fails with `SizeCapExceeded` before any level larger than
/// `size_cap` vertices is materialized.
pub fn amplify(d: &Digraph, family: &IndependentSetFamily, t: usize, size_cap: usize) -> Result<AmplifierOutput> {
    if t < 3 {
        return Err(Error::InvalidParameter(format!("t must be at least 3, got {t}")));
    }
    family.check(d)?;
    let colors = intersection_graph(family).proper_coloring();
    let (result, copies) = amplify_colored(d, &family.sets, &colors, t, size_cap)?;
    Ok(AmplifierOutput::new(d.clone(), family.clone(), result, copies))
}

/// One level of the recursion. `colors[i]` is the class of `sets[i]`; sets
/// of equal color are pairwise disjoint. Returns the digraph and the
/// tracked copies of `d` in it.
fn amplify_colored(
    d: &Digraph,
    sets: &[Vec<Vertex>],
    colors: &[usize],
    t: usize,
    size_cap: usize,
) -> Result<(Digraph, Vec<Embedding>)> {
    if sets.is_empty() {
        return Ok((d.clone(), vec![Embedding::identity(d.vertex_count())]));
    }

    // Largest class first, ties to the lowest color.
    let max_color = colors.iter().copied().max().unwrap_or(0);
    let mut class_size = vec![0usize; max_color + 1];
    for &c in colors {
        class_size[c] += 1;
    }
    let chosen_color = (1..=max_color)
        .max_by_key(|&c| (class_size[c], std::cmp::Reverse(c)))
        .expect("at least one color");
    let (chosen, rest): (Vec<usize>, Vec<usize>) = (0..sets.len()).partition(|&i| colors[i] == chosen_color);

    let mut current = d.clone();
    let mut copies = vec![Embedding::identity(d.vertex_count())];
    for &j in &chosen {
        let union: Vec<Vertex> = copies.iter().flat_map(|copy| copy.image_of_set(&sets[j])).collect();
        if let Some((tail, head)) = spanned_arc(&current, &union) {
            return Err(Error::NotIndependent { set: j + 1, tail, head });
        }
        let n = current.vertex_count();
        let required = n as u128 * t as u128;
        if required > size_cap as u128 {
            return Err(Error::SizeCapExceeded {
                required,
                cap: size_cap,
            });
        }
        let mut next = current.repeat(t);
        for block in 0..t {
            let (from, to) = (block * n, ((block + 1) % t) * n);
            for &u in &union {
                for &w in &union {
                    next.try_add_arc(u + from, w + to)
                        .expect("wiring arcs join distinct copies");
                }
            }
        }
        copies = copies
            .iter()
            .flat_map(|copy| (0..t).map(move |block| copy.shifted(block * n)))
            .collect();
        current = next;
    }

    let mut next_sets = Vec::with_capacity(copies.len() * rest.len());
    let mut next_colors = Vec::with_capacity(copies.len() * rest.len());
    for copy in &copies {
        for &r in &rest {
            next_sets.push(copy.image_of_set(&sets[r]));
            next_colors.push(colors[r]);
        }
    }
    let (result, outer) = amplify_colored(&current, &next_sets, &next_colors, t, size_cap)?;
    let composed = outer
        .iter()
        .flat_map(|level| copies.iter().map(move |copy| copy.then(level)))
        .collect();
    Ok((result, composed))
}

/// A k-dicoloring of `out.result` under which every tracked copy has some
/// set image carrying all `k` colors, if one exists. Enumerates labeled
/// k-dicolorings, so `k^|V|` must fit in `budget`.
pub fn find_postcondition_violation(out: &AmplifierOutput, k: usize, budget: u64) -> Result<Option<Dicoloring>> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let mut violation = None;
    enumerate_k_dicolorings(&out.result, k, budget, |colors| {
        let some_copy_ok = out
            .set_images
            .iter()
            .any(|images| images.iter().all(|image| distinct_colors(colors, image) < k));
        if some_copy_ok {
            ControlFlow::Continue(())
        } else {
            violation = Some(Dicoloring::new(k, colors.to_vec()));
            ControlFlow::Break(())
        }
    })?;
    Ok(violation)
}

/// True iff every k-dicoloring of `out.result` leaves some tracked copy with
/// each set image on at most `k - 1` colors.
pub fn verify_amplifier_postcondition(out: &AmplifierOutput, k: usize, budget: u64) -> Result<bool> {
    Ok(find_postcondition_violation(out, k, budget)?.is_none())
}

/// The `n`-th member of the hard sequence: a single vertex, then repeatedly
/// the amplification of `chi` disjoint copies of the previous member with
/// the family of all transversals (one vertex per copy), where `chi` is the
/// previous member's dichromatic number.
pub fn build_hard_sequence(t: usize, n: usize, size_cap: usize) -> Result<Digraph> {
    build_hard_sequence_with_family_cap(t, n, size_cap, DEFAULT_FAMILY_CAP)
}

pub fn build_hard_sequence_with_family_cap(t: usize, n: usize, size_cap: usize, family_cap: usize) -> Result<Digraph> {
    if t < 3 {
        return Err(Error::InvalidParameter(format!("t must be at least 3, got {t}")));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("sequence index starts at 1".into()));
    }
    let mut member = Digraph::empty(1);
    for _ in 1..n {
        let (chi, _) = dichromatic_number(&member);
        let size = member.vertex_count();
        let union_size = size as u128 * chi as u128;
        if union_size > size_cap as u128 {
            return Err(Error::SizeCapExceeded {
                required: union_size,
                cap: size_cap,
            });
        }
        let family_size = (size as u128).checked_pow(chi as u32).unwrap_or(u128::MAX);
        if family_size > family_cap as u128 {
            return Err(Error::SizeCapExceeded {
                required: family_size,
                cap: family_cap,
            });
        }
        let union = member.repeat(chi);
        let family = IndependentSetFamily {
            sets: transversals(size, chi),
        };
        member = amplify(&union, &family, t, size_cap)?.result;
    }
    Ok(member)
}

/// All sets with exactly one vertex from each of `parts` consecutive blocks
/// of `size` vertices, in lexicographic order.
fn transversals(size: usize, parts: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut pick = vec![1usize; parts];
    if size == 0 {
        return out;
    }
    loop {
        out.push(pick.iter().enumerate().map(|(block, &v)| block * size + v).collect());
        let mut pos = parts;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if pick[pos] < size {
                pick[pos] += 1;
                for later in &mut pick[pos + 1..] {
                    *later = 1;
                }
                break;
            }
        }
    }
}
