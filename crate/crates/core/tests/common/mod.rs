//! Brute-force oracles shared by the integration tests. Everything here works
//! from the raw arc list and vertex subsets only, never through the search
//! code it is used to check.

#![allow(dead_code)]

use std::collections::HashSet;

use rand::Rng;
use tchordal::digraph::{Digraph, Vertex};

/// Random simple digraph: each unordered pair gets an arc with probability
/// `p`, oriented uniformly.
pub fn random_digraph(rng: &mut impl Rng, n: usize, p: f64) -> Digraph {
    let mut arcs = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                arcs.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
            }
        }
    }
    Digraph::new(n, arcs).unwrap()
}

pub fn arc_set(d: &Digraph) -> HashSet<(Vertex, Vertex)> {
    d.arcs().iter().copied().collect()
}

pub fn members(mask: u32, n: usize) -> Vec<Vertex> {
    (1..=n).filter(|&v| mask >> (v - 1) & 1 == 1).collect()
}

/// No self-loop, no digon, no repeated arc, endpoints in range.
pub fn check_simple(d: &Digraph) -> Result<(), String> {
    let mut seen = HashSet::new();
    for &(u, v) in d.arcs() {
        if u == v {
            return Err(format!("self-loop {u}"));
        }
        if u == 0 || v == 0 || u > d.vertex_count() || v > d.vertex_count() {
            return Err(format!("arc {u}->{v} out of range"));
        }
        if !seen.insert((u, v)) {
            return Err(format!("repeated arc {u}->{v}"));
        }
    }
    if let Some(&(u, v)) = d.arcs().iter().find(|&&(u, v)| seen.contains(&(v, u))) {
        return Err(format!("digon {u}<->{v}"));
    }
    Ok(())
}

/// Maximum clique of the underlying graph over all vertex subsets.
pub fn brute_clique_number(d: &Digraph) -> usize {
    let n = d.vertex_count();
    let arcs = arc_set(d);
    let adjacent = |u, v| arcs.contains(&(u, v)) || arcs.contains(&(v, u));
    (0u32..1 << n)
        .map(|mask| members(mask, n))
        .filter(|s| {
            s.iter()
                .enumerate()
                .all(|(i, &u)| s[i + 1..].iter().all(|&v| adjacent(u, v)))
        })
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// `reach[u][v]`: a directed walk from `u` to `v` exists (reflexive).
pub fn reachability(d: &Digraph) -> Vec<Vec<bool>> {
    let n = d.vertex_count();
    let mut reach = vec![vec![false; n + 1]; n + 1];
    for (s, row) in reach.iter_mut().enumerate().skip(1) {
        row[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &(a, b) in d.arcs() {
                if a == u && !row[b] {
                    row[b] = true;
                    stack.push(b);
                }
            }
        }
    }
    reach
}

/// Out-neighborhoods as bit masks (bit `v - 1` for vertex `v`).
pub fn out_masks(d: &Digraph) -> Vec<u32> {
    let mut masks = vec![0u32; d.vertex_count() + 1];
    for &(a, b) in d.arcs() {
        masks[a] |= 1 << (b - 1);
    }
    masks
}

/// Acyclicity of the subdigraph induced on `subset` by repeated sink removal.
pub fn mask_is_acyclic(out: &[u32], mut alive: u32) -> bool {
    while alive != 0 {
        let sink = (0..32).find(|&i| alive >> i & 1 == 1 && out[i + 1] & alive == 0);
        match sink {
            Some(i) => alive &= !(1 << i),
            None => return false,
        }
    }
    true
}

pub fn subset_is_acyclic(d: &Digraph, subset: &[Vertex]) -> bool {
    let alive = subset.iter().fold(0u32, |m, &v| m | 1 << (v - 1));
    mask_is_acyclic(&out_masks(d), alive)
}

/// Every subset that induces exactly a directed cycle, listed from its
/// smallest vertex along the arcs. Sorted.
pub fn brute_induced_cycles(d: &Digraph) -> Vec<Vec<Vertex>> {
    let n = d.vertex_count();
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        let s = members(mask, n);
        if s.len() < 3 {
            continue;
        }
        let inside: Vec<(Vertex, Vertex)> = d
            .arcs()
            .iter()
            .copied()
            .filter(|&(a, b)| s.contains(&a) && s.contains(&b))
            .collect();
        if inside.len() != s.len() {
            continue;
        }
        let out_deg_one = s.iter().all(|&v| inside.iter().filter(|&&(a, _)| a == v).count() == 1);
        let in_deg_one = s.iter().all(|&v| inside.iter().filter(|&&(_, b)| b == v).count() == 1);
        if !(out_deg_one && in_deg_one) {
            continue;
        }
        let mut cycle = vec![s[0]];
        loop {
            let last = *cycle.last().unwrap();
            let next = inside.iter().find(|&&(a, _)| a == last).unwrap().1;
            if next == s[0] {
                break;
            }
            cycle.push(next);
        }
        if cycle.len() == s.len() {
            out.push(cycle);
        }
    }
    out.sort();
    out
}

/// Whether some subset of size `l` induces exactly a directed path.
pub fn brute_has_induced_path(d: &Digraph, l: usize) -> bool {
    let n = d.vertex_count();
    (0u32..1 << n).any(|mask| {
        let s = members(mask, n);
        if s.len() != l {
            return false;
        }
        let inside: Vec<(Vertex, Vertex)> = d
            .arcs()
            .iter()
            .copied()
            .filter(|&(a, b)| s.contains(&a) && s.contains(&b))
            .collect();
        if inside.len() + 1 != l {
            return false;
        }
        let outd = |v| inside.iter().filter(|&&(a, _)| a == v).count();
        let ind = |v| inside.iter().filter(|&&(_, b)| b == v).count();
        if s.iter().any(|&v| outd(v) > 1 || ind(v) > 1) {
            return false;
        }
        let Some(&start) = s.iter().find(|&&v| ind(v) == 0) else {
            return false;
        };
        let mut len = 1;
        let mut cur = start;
        while let Some(&(_, b)) = inside.iter().find(|&&(a, _)| a == cur) {
            cur = b;
            len += 1;
        }
        len == l
    })
}

/// Independent validator for an induced cycle certificate.
pub fn is_induced_cycle(d: &Digraph, seq: &[Vertex]) -> bool {
    let k = seq.len();
    let arcs = arc_set(d);
    let distinct: HashSet<_> = seq.iter().collect();
    if k < 3 || distinct.len() != k {
        return false;
    }
    let expected: HashSet<(Vertex, Vertex)> = (0..k).map(|i| (seq[i], seq[(i + 1) % k])).collect();
    let among: HashSet<(Vertex, Vertex)> = arcs
        .iter()
        .copied()
        .filter(|(a, b)| distinct.contains(a) && distinct.contains(b))
        .collect();
    among == expected
}

/// Independent validator for an induced path certificate.
pub fn is_induced_path(d: &Digraph, seq: &[Vertex]) -> bool {
    let arcs = arc_set(d);
    let distinct: HashSet<_> = seq.iter().collect();
    if seq.is_empty() || distinct.len() != seq.len() {
        return false;
    }
    let expected: HashSet<(Vertex, Vertex)> = seq.windows(2).map(|w| (w[0], w[1])).collect();
    let among: HashSet<(Vertex, Vertex)> = arcs
        .iter()
        .copied()
        .filter(|(a, b)| distinct.contains(a) && distinct.contains(b))
        .collect();
    among == expected
}

/// Induced-copy check for an image list, from the arc sets alone.
pub fn is_induced_embedding(source: &Digraph, host: &Digraph, images: &[Vertex]) -> bool {
    let distinct: HashSet<_> = images.iter().collect();
    if images.len() != source.vertex_count()
        || distinct.len() != images.len()
        || images.iter().any(|&v| v == 0 || v > host.vertex_count())
    {
        return false;
    }
    let src = arc_set(source);
    let dst = arc_set(host);
    (1..=source.vertex_count()).all(|a| {
        (1..=source.vertex_count())
            .all(|b| a == b || src.contains(&(a, b)) == dst.contains(&(images[a - 1], images[b - 1])))
    })
}

pub fn is_independent(d: &Digraph, set: &[Vertex]) -> bool {
    let s: HashSet<_> = set.iter().collect();
    !d.arcs().iter().any(|(a, b)| s.contains(a) && s.contains(b))
}

/// Number of labeled assignments of `k` colors that leave every color
/// class acyclic, out of all `k^n`.
pub fn naive_dicoloring_count(d: &Digraph, k: usize) -> u64 {
    let n = d.vertex_count();
    let out = out_masks(d);
    let total = (k as u64).pow(n as u32);
    (0..total).filter(|&code| classes_acyclic(&out, n, k, code)).count() as u64
}

fn classes_acyclic(out: &[u32], n: usize, k: usize, mut code: u64) -> bool {
    let mut classes = vec![0u32; k];
    for v in 1..=n {
        classes[(code % k as u64) as usize] |= 1 << (v - 1);
        code /= k as u64;
    }
    classes.iter().all(|&class| mask_is_acyclic(out, class))
}

/// Smallest k for which some assignment of `k` colors leaves every color
/// class acyclic, trying all `k^n` assignments.
pub fn naive_dichromatic_number(d: &Digraph) -> usize {
    let n = d.vertex_count();
    if n == 0 {
        return 0;
    }
    let out = out_masks(d);
    (1..=n)
        .find(|&k| (0..(k as u64).pow(n as u32)).any(|code| classes_acyclic(&out, n, k, code)))
        .unwrap()
}
