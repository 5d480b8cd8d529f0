//! Colorful embedding of rooted-tree patterns into digraphs.
//!
//! Given a pattern tree, a host digraph, a vertex coloring of the host and a
//! distinguished host vertex `d`, [`ColorfulEmbedder`] decides whether the
//! pattern maps into the host with its root on `d`, every pattern arc on a
//! host arc, and all image vertices colored differently. It returns one such
//! embedding when it exists.
//!
//! The dynamic program runs over pattern subtrees. For a subtree `S` and
//! host vertex `h` it keeps the family of color sets `X` such that `S`
//! embeds colorfully at `h` using exactly the colors in `X`. A node's
//! children are folded in one at a time, so the states are "node `x` with its
//! first `i` children attached". Identical states across the pattern (the
//! many copies of a small binomial tree, say) are interned and computed once.
//! Families are bitsets over `2^C` color masks, which bounds the work by
//! `2^C · poly(|host|)`.

use std::collections::HashMap;

use crate::arborescence::{uba_shape, Lba};
use crate::error::{Error, Result};
use crate::tournament::{Player, Tournament};

/// Largest color count accepted unless a caller asks for more.
pub const DEFAULT_MAX_COLORS: usize = 20;

/// Hard ceiling on the DP width; color sets are `u32` masks.
const MAX_COLORS_CEILING: usize = 30;

/// A rooted tree whose arcs point from parent to child.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternTree {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    root: usize,
}

impl PatternTree {
    /// Builds a pattern from parent links; exactly one node may lack a parent.
    pub fn from_parents(parent: Vec<Option<usize>>) -> Result<Self> {
        let n = parent.len();
        let bad = |msg: String| Error::InvalidEmbedInput(msg);
        let mut roots = parent.iter().enumerate().filter(|(_, p)| p.is_none());
        let root = match (roots.next(), roots.next()) {
            (Some((r, _)), None) => r,
            _ => return Err(bad("pattern must have exactly one root".into())),
        };
        let mut children = vec![Vec::new(); n];
        for (x, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= n || p == x {
                    return Err(bad(format!("node {x} has invalid parent {p}")));
                }
                children[p].push(x);
            }
        }
        // Every node must reach the root.
        let mut seen = vec![false; n];
        let mut stack = vec![root];
        let mut count = 0;
        while let Some(x) = stack.pop() {
            if std::mem::replace(&mut seen[x], true) {
                return Err(bad("pattern is not a tree".into()));
            }
            count += 1;
            stack.extend(&children[x]);
        }
        if count != n {
            return Err(bad("pattern is not connected".into()));
        }
        Ok(Self {
            parent,
            children,
            root,
        })
    }

    /// The binomial tree of order `c` with its canonical numbering.
    pub fn binomial(c: u32) -> Self {
        Self::from_parents(uba_shape(c).parents()).expect("binomial shape is a tree")
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, x: usize) -> Option<usize> {
        self.parent[x]
    }

    pub fn children(&self, x: usize) -> &[usize] {
        &self.children[x]
    }

    /// `(parent, child)` pairs.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(x, p)| p.map(|p| (p, x)))
    }
}

/// A simple digraph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HostGraph {
    n: usize,
    out: Vec<Vec<usize>>,
    adj: Vec<bool>,
}

impl HostGraph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            out: vec![Vec::new(); n],
            adj: vec![false; n * n],
        }
    }

    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::new(n);
        for (u, v) in arcs {
            g.add_arc(u, v)?;
        }
        Ok(g)
    }

    /// All arcs of a tournament, `u → v` whenever `u` beats `v`.
    pub fn from_tournament(t: &Tournament) -> Self {
        let n = t.n();
        let mut g = Self::new(n);
        for u in 0..n {
            for v in 0..n {
                if t.beats(u, v) {
                    g.add_arc(u, v).expect("tournaments have no self-loops");
                }
            }
        }
        g
    }

    /// Adds `u → v`; repeated arcs are ignored.
    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidEmbedInput(format!(
                "arc ({u},{v}) out of range"
            )));
        }
        if u == v {
            return Err(Error::InvalidEmbedInput(format!("self-loop at {u}")));
        }
        if !std::mem::replace(&mut self.adj[u * self.n + v], true) {
            let pos = self.out[u].partition_point(|&w| w < v);
            self.out[u].insert(pos, v);
        }
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_arcs(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    /// Out-neighbors, ascending.
    pub fn out_neighbors(&self, u: usize) -> &[usize] {
        &self.out[u]
    }

    pub fn in_degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_arc(u, v)).count()
    }
}

/// Vertex colors in `1..=C`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring(Vec<u32>);

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if colors.contains(&0) {
            return Err(Error::InvalidEmbedInput("colors start at 1".into()));
        }
        Ok(Self(colors))
    }

    /// Every vertex its own color, `v ↦ v + 1`.
    pub fn identity(n: usize) -> Self {
        Self((1..=n as u32).collect())
    }

    #[inline]
    pub fn color(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest color in use.
    pub fn num_colors(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0) as usize
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Appends one vertex with the given color.
    pub fn extended(&self, color: u32) -> Self {
        let mut v = self.0.clone();
        v.push(color.max(1));
        Self(v)
    }
}

/// Pattern node `x` sits on host vertex `map[x]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self, x: usize) -> usize {
        self.map[x]
    }

    /// Checks the embedding contract: `f ↦ d`, arcs preserved, colorful.
    pub fn is_valid(
        &self,
        pattern: &PatternTree,
        host: &HostGraph,
        f: usize,
        d: usize,
        col: &Coloring,
    ) -> bool {
        if self.map.len() != pattern.len() || self.map.get(f) != Some(&d) {
            return false;
        }
        if self.map.iter().any(|&h| h >= host.num_vertices()) {
            return false;
        }
        if !pattern
            .arcs()
            .all(|(p, c)| host.has_arc(self.map[p], self.map[c]))
        {
            return false;
        }
        let mut colors: Vec<u32> = self.map.iter().map(|&h| col.color(h)).collect();
        colors.sort_unstable();
        colors.windows(2).all(|w| w[0] != w[1])
    }
}

type ShapeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Shape {
    Leaf,
    /// `base` with one more child subtree `child` hung under its root.
    Attach {
        base: ShapeId,
        child: ShapeId,
    },
}

#[derive(Debug, Clone, Default)]
struct Family {
    bits: Vec<u64>,
    list: Vec<u32>,
}

impl Family {
    fn empty(words: usize) -> Self {
        Self {
            bits: vec![0; words],
            list: Vec::new(),
        }
    }

    #[inline]
    fn contains(&self, mask: u32) -> bool {
        let i = mask as usize;
        self.bits
            .get(i >> 6)
            .is_some_and(|w| (w >> (i & 63)) & 1 == 1)
    }

    #[inline]
    fn insert(&mut self, mask: u32) {
        let i = mask as usize;
        let w = &mut self.bits[i >> 6];
        let bit = 1u64 << (i & 63);
        if *w & bit == 0 {
            *w |= bit;
            self.list.push(mask);
        }
    }
}

fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Calls `f` on every submask of `free` with exactly `size` bits set.
fn for_each_submask_of_size(free: u32, size: u32, mut f: impl FnMut(u32)) {
    let positions: Vec<u32> = (0..32).filter(|b| free >> b & 1 == 1).collect();
    let m = positions.len() as u32;
    if size > m {
        return;
    }
    if size == 0 {
        f(0);
        return;
    }
    let limit = 1u64 << m;
    let mut comb: u64 = (1u64 << size) - 1;
    while comb < limit {
        let mut mask = 0u32;
        let mut c = comb;
        while c != 0 {
            let j = c.trailing_zeros();
            mask |= 1 << positions[j as usize];
            c &= c - 1;
        }
        f(mask);
        // Gosper's hack: next combination with the same popcount.
        let low = comb & comb.wrapping_neg();
        let ripple = comb + low;
        comb = (((ripple ^ comb) >> 2) / low) | ripple;
    }
}

/// Reusable colorful tree embedder for a fixed pattern, host and anchor.
///
/// Only the coloring changes between calls to [`ColorfulEmbedder::find`],
/// which is how the color-coding loop uses it.
#[derive(Debug, Clone)]
pub struct ColorfulEmbedder<'a> {
    pattern: &'a PatternTree,
    host: &'a HostGraph,
    d: usize,
    max_colors: usize,
    shapes: Vec<Shape>,
    size: Vec<u32>,
    /// `prefix[x][i]`: node `x` with its first `i` children attached.
    prefix: Vec<Vec<ShapeId>>,
    /// `demand[s][h]`: the family of shape `s` at host `h` is needed.
    demand: Vec<Vec<bool>>,
}

impl<'a> ColorfulEmbedder<'a> {
    /// `f` must be the pattern root and `d` a host vertex.
    pub fn new(pattern: &'a PatternTree, host: &'a HostGraph, f: usize, d: usize) -> Result<Self> {
        if f != pattern.root() {
            return Err(Error::InvalidEmbedInput(
                "the anchored pattern node must be the root".into(),
            ));
        }
        if d >= host.num_vertices() {
            return Err(Error::InvalidEmbedInput(format!(
                "host vertex {d} out of range"
            )));
        }

        let mut shapes = vec![Shape::Leaf];
        let mut size = vec![1u32];
        let mut intern: HashMap<Shape, ShapeId> = HashMap::from([(Shape::Leaf, 0)]);
        let mut prefix: Vec<Vec<ShapeId>> = vec![Vec::new(); pattern.len()];

        // Post-order so children are interned before their parents.
        let mut order = Vec::with_capacity(pattern.len());
        let mut stack = vec![(pattern.root(), false)];
        while let Some((x, expanded)) = stack.pop() {
            if expanded {
                order.push(x);
            } else {
                stack.push((x, true));
                stack.extend(pattern.children(x).iter().rev().map(|&c| (c, false)));
            }
        }
        for &x in &order {
            let mut chain = vec![0];
            for &c in pattern.children(x) {
                let child = *prefix[c].last().unwrap();
                let base = *chain.last().unwrap();
                let key = Shape::Attach { base, child };
                let id = *intern.entry(key).or_insert_with(|| {
                    shapes.push(key);
                    size.push(size[base] + size[child]);
                    shapes.len() - 1
                });
                chain.push(id);
            }
            prefix[x] = chain;
        }

        let hosts = host.num_vertices();
        let mut demand = vec![vec![false; hosts]; shapes.len()];
        let top = *prefix[pattern.root()].last().unwrap();
        demand[top][d] = true;
        for s in (0..shapes.len()).rev() {
            if let Shape::Attach { base, child } = shapes[s] {
                for h in 0..hosts {
                    if demand[s][h] {
                        demand[base][h] = true;
                        for &w in host.out_neighbors(h) {
                            demand[child][w] = true;
                        }
                    }
                }
            }
        }

        Ok(Self {
            pattern,
            host,
            d,
            max_colors: DEFAULT_MAX_COLORS,
            shapes,
            size,
            prefix,
            demand,
        })
    }

    /// Overrides the DP width guard (capped at 30 colors).
    pub fn with_max_colors(mut self, max_colors: usize) -> Self {
        self.max_colors = max_colors.min(MAX_COLORS_CEILING);
        self
    }

    /// Number of distinct subtree states the DP evaluates.
    pub fn num_states(&self) -> usize {
        self.shapes.len()
    }

    /// Finds a colorful embedding under `col`, if one exists.
    pub fn find(&self, col: &Coloring) -> Result<Option<Embedding>> {
        let hosts = self.host.num_vertices();
        if col.len() != hosts {
            return Err(Error::InvalidEmbedInput(format!(
                "coloring covers {} vertices, host has {hosts}",
                col.len()
            )));
        }
        let colors = col.num_colors();
        if colors > self.max_colors {
            return Err(Error::WidthExceeded {
                colors,
                limit: self.max_colors,
            });
        }
        if self.pattern.len() > colors {
            return Ok(None);
        }
        let words = (1usize << colors).div_ceil(64);
        let bit = |h: usize| 1u32 << (col.color(h) - 1);

        let mut tables: Vec<Vec<Family>> = Vec::with_capacity(self.shapes.len());
        let mut unions: HashMap<(ShapeId, usize), Family> = HashMap::new();
        for (s, shape) in self.shapes.iter().enumerate() {
            let mut row = vec![Family::default(); hosts];
            for h in (0..hosts).filter(|&h| self.demand[s][h]) {
                let mut fam = Family::empty(words);
                match *shape {
                    Shape::Leaf => fam.insert(bit(h)),
                    Shape::Attach { base, child } => {
                        let bases = &tables[base][h];
                        if !bases.list.is_empty() {
                            let reach = unions.entry((child, h)).or_insert_with(|| {
                                let mut u = Family::empty(words);
                                for &w in self.host.out_neighbors(h) {
                                    for &m in &tables[child][w].list {
                                        u.insert(m);
                                    }
                                }
                                u
                            });
                            join_into(&mut fam, bases, reach, self.size[child], colors);
                        }
                    }
                }
                row[h] = fam;
            }
            tables.push(row);
        }

        let root = self.pattern.root();
        let top = *self.prefix[root].last().unwrap();
        let Some(&mask) = tables[top][self.d].list.first() else {
            return Ok(None);
        };
        let mut map = vec![usize::MAX; self.pattern.len()];
        self.rebuild(
            &tables,
            col,
            root,
            self.pattern.children(root).len(),
            self.d,
            mask,
            &mut map,
        )?;
        let emb = Embedding { map };
        if !emb.is_valid(self.pattern, self.host, root, self.d, col) {
            return Err(Error::Internal(
                "reconstructed embedding violates its contract".into(),
            ));
        }
        Ok(Some(emb))
    }

    #[allow(clippy::too_many_arguments)]
    fn rebuild(
        &self,
        tables: &[Vec<Family>],
        col: &Coloring,
        x: usize,
        attached: usize,
        h: usize,
        mask: u32,
        map: &mut [usize],
    ) -> Result<()> {
        if attached == 0 {
            map[x] = h;
            return Ok(());
        }
        let c = self.pattern.children(x)[attached - 1];
        let base = self.prefix[x][attached - 1];
        let child = *self.prefix[c].last().unwrap();
        let rest = mask & !(1u32 << (col.color(h) - 1));
        for &w in self.host.out_neighbors(h) {
            if rest >> (col.color(w) - 1) & 1 == 0 {
                continue;
            }
            let hit = tables[child][w]
                .list
                .iter()
                .copied()
                .find(|&sub| sub & !rest == 0 && tables[base][h].contains(mask ^ sub));
            if let Some(sub) = hit {
                self.rebuild(tables, col, c, self.pattern.children(c).len(), w, sub, map)?;
                return self.rebuild(tables, col, x, attached - 1, h, mask ^ sub, map);
            }
        }
        Err(Error::Internal(
            "DP table has no witness for a reachable state".into(),
        ))
    }
}

/// `out ∪= { a ∪ b : a ∈ bases, b ∈ reach, a ∩ b = ∅ }` where every `b` has
/// `child_size` colors. Enumerates whichever side is smaller per `a`.
fn join_into(out: &mut Family, bases: &Family, reach: &Family, child_size: u32, colors: usize) {
    if reach.list.is_empty() {
        return;
    }
    let full: u32 = if colors == 32 {
        u32::MAX
    } else {
        (1u32 << colors) - 1
    };
    for &a in &bases.list {
        let free = full & !a;
        let slots = free.count_ones();
        if slots < child_size {
            continue;
        }
        if binomial(slots, child_size) <= reach.list.len() as u64 {
            for_each_submask_of_size(free, child_size, |b| {
                if reach.contains(b) {
                    out.insert(a | b);
                }
            });
        } else {
            for &b in &reach.list {
                if a & b == 0 {
                    out.insert(a | b);
                }
            }
        }
    }
}

/// One-shot colorful embedding with the default width guard.
pub fn embed_colorful_tree(
    pattern: &PatternTree,
    host: &HostGraph,
    f: usize,
    d: usize,
    col: &Coloring,
) -> Result<Option<Embedding>> {
    ColorfulEmbedder::new(pattern, host, f, d)?.find(col)
}

/// Decides the instance exactly: looks for a spanning binomial arborescence
/// rooted at the favorite, giving every player its own color so that
/// colorful means injective.
pub fn solve_exact(t: &Tournament) -> Result<Option<Lba>> {
    solve_exact_with_width(t, DEFAULT_MAX_COLORS)
}

pub fn solve_exact_with_width(t: &Tournament, max_colors: usize) -> Result<Option<Lba>> {
    let pattern = PatternTree::binomial(t.rounds() as u32);
    let host = HostGraph::from_tournament(t);
    let embedder = ColorfulEmbedder::new(&pattern, &host, pattern.root(), t.vstar())?
        .with_max_colors(max_colors);
    let Some(emb) = embedder.find(&Coloring::identity(t.n()))? else {
        return Ok(None);
    };
    let parent = pattern
        .arcs()
        .map(|(p, c)| (emb.image(c) as Player, emb.image(p) as Player))
        .collect();
    let lba = Lba::from_parents(t.vstar(), parent);
    if !crate::arborescence::is_lba(t, &lba) || lba.len() != t.n() {
        return Err(Error::Internal(
            "exact solver produced an invalid arborescence".into(),
        ));
    }
    Ok(Some(lba))
}
