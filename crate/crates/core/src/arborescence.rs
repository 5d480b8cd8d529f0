//! Binomial arborescences.
//!
//! [`UbaShape`] is the unlabeled binomial tree on `2^c` nodes. An [`Lba`] is a
//! labeled copy of it whose arcs point from match winners to losers; an
//! `Lba` spanning every player and rooted at `v` is the same thing as a
//! bracket that `v` wins.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tournament::{play_bracket, simulate, Player, Seeding, Tournament};

/// Canonical unlabeled binomial arborescence on `2^order` nodes.
///
/// Node `0` is the root and `parent(x) = x & (x - 1)`. The children of `x`
/// are `x + 2^j` for every `2^j` below the lowest set bit of `x`, so they come
/// out in ascending subtree size `1, 2, 4, ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UbaShape {
    order: u32,
}

impl UbaShape {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn len(&self) -> usize {
        1usize << self.order
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn parent(&self, x: usize) -> Option<usize> {
        debug_assert!(x < self.len());
        (x != 0).then(|| x & (x - 1))
    }

    pub fn subtree_size(&self, x: usize) -> usize {
        if x == 0 {
            self.len()
        } else {
            1 << x.trailing_zeros()
        }
    }

    /// Children of `x`, smallest subtree first.
    pub fn children(&self, x: usize) -> Vec<usize> {
        let limit = self.subtree_size(x);
        (0..self.order)
            .map(|j| 1usize << j)
            .take_while(|&step| step < limit)
            .map(|step| x + step)
            .collect()
    }

    pub fn parents(&self) -> Vec<Option<usize>> {
        (0..self.len()).map(|x| self.parent(x)).collect()
    }
}

/// The unique binomial arborescence on `2^c` nodes.
pub fn uba_shape(c: u32) -> UbaShape {
    assert!(c < usize::BITS, "binomial order {c} too large");
    UbaShape { order: c }
}

/// A labeled binomial arborescence over a subset of players.
///
/// Stored as parent links; child lists and subtree sizes are derived.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lba {
    root: Player,
    parent: BTreeMap<Player, Player>,
}

/// Derived child lists and subtree sizes of a well-formed rooted tree.
#[derive(Debug, Clone)]
pub(crate) struct TreeView {
    pub children: BTreeMap<Player, Vec<Player>>,
    pub size: BTreeMap<Player, usize>,
}

impl Lba {
    pub fn singleton(root: Player) -> Self {
        Self {
            root,
            parent: BTreeMap::new(),
        }
    }

    /// Wraps raw parent links. Shape and arcs are checked by [`is_lba`].
    pub fn from_parents(root: Player, parent: BTreeMap<Player, Player>) -> Self {
        Self { root, parent }
    }

    pub fn root(&self) -> Player {
        self.root
    }

    pub fn parent_of(&self, v: Player) -> Option<Player> {
        self.parent.get(&v).copied()
    }

    pub fn parent_links(&self) -> &BTreeMap<Player, Player> {
        &self.parent
    }

    pub fn len(&self) -> usize {
        self.parent.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: Player) -> bool {
        v == self.root || self.parent.contains_key(&v)
    }

    /// Vertex set, ascending.
    pub fn vertices(&self) -> Vec<Player> {
        let mut vs: Vec<Player> = self.parent.keys().copied().collect();
        let pos = vs.partition_point(|&v| v < self.root);
        vs.insert(pos, self.root);
        vs
    }

    /// `(parent, child)` arcs, ordered by child.
    pub fn arcs(&self) -> impl Iterator<Item = (Player, Player)> + '_ {
        self.parent.iter().map(|(&c, &p)| (p, c))
    }

    /// Child lists (smallest subtree first) and subtree sizes, or `None` if
    /// the parent links do not form a tree rooted at `root`.
    pub(crate) fn tree_view(&self) -> Option<TreeView> {
        if self.parent.contains_key(&self.root) {
            return None;
        }
        let mut depth: BTreeMap<Player, usize> = BTreeMap::new();
        depth.insert(self.root, 0);
        for &v in self.parent.keys() {
            let mut path = Vec::new();
            let mut cur = v;
            while !depth.contains_key(&cur) {
                if path.len() > self.parent.len() {
                    return None;
                }
                path.push(cur);
                cur = *self.parent.get(&cur)?;
            }
            let mut d = depth[&cur];
            for &p in path.iter().rev() {
                d += 1;
                depth.insert(p, d);
            }
        }
        let mut order: Vec<Player> = depth.keys().copied().collect();
        order.sort_by_key(|v| std::cmp::Reverse(depth[v]));
        let mut size: BTreeMap<Player, usize> = depth.keys().map(|&v| (v, 1)).collect();
        let mut children: BTreeMap<Player, Vec<Player>> =
            depth.keys().map(|&v| (v, Vec::new())).collect();
        for &v in &order {
            if let Some(&p) = self.parent.get(&v) {
                let s = size[&v];
                *size.get_mut(&p).unwrap() += s;
                children.get_mut(&p).unwrap().push(v);
            }
        }
        for kids in children.values_mut() {
            kids.sort_by_key(|c| (size[c], *c));
        }
        Some(TreeView { children, size })
    }

    /// True iff the parent links form a binomial arborescence (ignoring arcs).
    pub fn has_binomial_shape(&self) -> bool {
        let Some(view) = self.tree_view() else {
            return false;
        };
        view.children.values().all(|kids| {
            kids.iter()
                .enumerate()
                .all(|(i, c)| view.size[c] == 1usize << i)
        })
    }

    /// Children of `u`, smallest subtree first.
    pub fn children(&self, u: Player) -> Vec<Player> {
        self.tree_view()
            .and_then(|mut v| v.children.remove(&u))
            .unwrap_or_default()
    }
}

impl fmt::Display for Lba {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lba root={}", self.root)?;
        for (c, p) in &self.parent {
            writeln!(f, "child {c} parent {p}")?;
        }
        Ok(())
    }
}

impl FromStr for Lba {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidLba(msg.to_string());
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| bad("empty input"))?;
        let root = header
            .strip_prefix("lba root=")
            .and_then(|r| r.parse().ok())
            .ok_or_else(|| bad("expected `lba root=<id>`"))?;
        let mut parent = BTreeMap::new();
        for line in lines {
            let toks: Vec<&str> = line.split_whitespace().collect();
            let (c, p) = match toks.as_slice() {
                ["child", c, "parent", p] => (c.parse(), p.parse()),
                _ => return Err(bad(&format!("bad line {line:?}"))),
            };
            let (Ok(c), Ok(p)) = (c, p) else {
                return Err(bad(&format!("bad ids in {line:?}")));
            };
            if parent.insert(c, p).is_some() {
                return Err(bad(&format!("vertex {c} listed twice")));
            }
        }
        Ok(Self { root, parent })
    }
}

/// True iff `cand` is a binomial arborescence whose every arc is a win in `t`.
pub fn is_lba(t: &Tournament, cand: &Lba) -> bool {
    if !cand.len().is_power_of_two() || cand.vertices().iter().any(|&v| v >= t.n()) {
        return false;
    }
    cand.arcs().all(|(p, c)| t.beats(p, c)) && cand.has_binomial_shape()
}

/// The arborescence of matches played under `s`: each loser hangs off the
/// player who knocked it out.
pub fn seeding_to_lba(t: &Tournament, s: &Seeding) -> Lba {
    let trace = simulate(t, s);
    let parent = trace.arcs().map(|m| (m.loser, m.winner)).collect();
    Lba {
        root: trace.champion(),
        parent,
    }
}

fn bracket_leaves(view: &TreeView, u: Player, out: &mut Vec<Player>) {
    out.push(u);
    for &c in &view.children[&u] {
        bracket_leaves(view, c, out);
    }
}

/// Leaf order of a sub-bracket realizing `l`; its length is `|V(l)|`.
pub(crate) fn lba_leaf_order(l: &Lba) -> Result<Vec<Player>> {
    if !l.has_binomial_shape() {
        return Err(Error::InvalidLba("not a binomial arborescence".into()));
    }
    let view = l.tree_view().expect("binomial shape implies a tree");
    let mut out = Vec::with_capacity(l.len());
    bracket_leaves(&view, l.root, &mut out);
    Ok(out)
}

/// A seeding whose matches are exactly the arcs of the spanning `l`.
///
/// The root takes the left half of the bracket; its largest-subtree child
/// takes the right half, recursively.
pub fn lba_to_seeding(l: &Lba) -> Result<Seeding> {
    let order = lba_leaf_order(l)?;
    Seeding::new(order).map_err(|_| Error::InvalidLba("arborescence does not span 0..n".into()))
}

/// Some valid LBA spanning exactly `x`: plays `x` in ascending order.
pub fn arbitrary_lba(t: &Tournament, x: &[Player]) -> Result<Lba> {
    if !x.len().is_power_of_two() {
        return Err(Error::Precondition(format!(
            "|x| = {} is not a power of two",
            x.len()
        )));
    }
    let set: BTreeSet<Player> = x.iter().copied().collect();
    if set.len() != x.len() || set.iter().any(|&p| p >= t.n()) {
        return Err(Error::Precondition(
            "x must be distinct players of t".into(),
        ));
    }
    let leaves: Vec<Player> = set.into_iter().collect();
    let (rounds, champion) = play_bracket(t, &leaves);
    let parent = rounds
        .iter()
        .flatten()
        .map(|m| (m.loser, m.winner))
        .collect();
    Ok(Lba {
        root: champion,
        parent,
    })
}

/// Joins two disjoint equal-size LBAs under whichever root wins their match.
pub fn merge_lbas(t: &Tournament, a: &Lba, b: &Lba) -> Result<Lba> {
    if a.len() != b.len() {
        return Err(Error::Precondition(format!(
            "cannot merge LBAs of sizes {} and {}",
            a.len(),
            b.len()
        )));
    }
    if a.vertices().iter().any(|&v| b.contains(v)) {
        return Err(Error::Precondition("LBAs share a vertex".into()));
    }
    let (top, bottom) = if t.beats(a.root, b.root) {
        (a, b)
    } else {
        (b, a)
    };
    let mut parent = top.parent.clone();
    parent.extend(bottom.parent.iter().map(|(&c, &p)| (c, p)));
    parent.insert(bottom.root, top.root);
    Ok(Lba {
        root: top.root,
        parent,
    })
}
