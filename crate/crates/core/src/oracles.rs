//! Brute-force oracles and executable structural checks.
//!
//! Nothing here is on a solver's hot path except [`is_wwf`]. The enumerators
//! refuse inputs beyond desk scale instead of running for hours.

use std::collections::{BTreeMap, BTreeSet};

use crate::arborescence::{arbitrary_lba, is_lba, Lba};
use crate::error::{Error, Result};
use crate::indeg::{forest_size, Wwf};
use crate::tournament::{
    play_bracket, seeding_from_sequence, simulate, simulate_subset, KnockoutTrace, Match,
    MatchSets, Player, Seeding, Tournament,
};

/// Largest bracket [`enumerate_seedings`] and [`brute_force_decide`] accept.
pub const SEEDING_GUARD: usize = 8;

/// Largest tournament [`brute_force_wwf`] accepts.
pub const WWF_GUARD: usize = 16;

/// One leaf order per bracket-symmetry class over `players`: at every
/// internal node the left half holds the smaller minimum.
fn canonical_brackets(players: &[Player]) -> Vec<Vec<Player>> {
    if players.len() == 1 {
        return vec![players.to_vec()];
    }
    let half = players.len() / 2;
    let (first, rest) = players.split_first().unwrap();
    let mut out = Vec::new();
    for partners in combinations(rest, half - 1) {
        let mut left = vec![*first];
        left.extend(&partners);
        let right: Vec<Player> = rest
            .iter()
            .copied()
            .filter(|p| !partners.contains(p))
            .collect();
        let rights = canonical_brackets(&right);
        for l in canonical_brackets(&left) {
            for r in &rights {
                let mut order = l.clone();
                order.extend(r);
                out.push(order);
            }
        }
    }
    out
}

/// All `m`-subsets of `items`, in lexicographic order of positions.
fn combinations(items: &[Player], m: usize) -> Vec<Vec<Player>> {
    fn go(
        items: &[Player],
        m: usize,
        start: usize,
        cur: &mut Vec<Player>,
        out: &mut Vec<Vec<Player>>,
    ) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        let need = m - cur.len();
        for i in start..=items.len().saturating_sub(need) {
            if i >= items.len() {
                break;
            }
            cur.push(items[i]);
            go(items, m, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m <= items.len() {
        go(items, m, 0, &mut Vec::with_capacity(m), &mut out);
    }
    out
}

/// One seeding per class of brackets equal up to sibling swaps;
/// `n! / 2^(n-1)` of them.
pub fn enumerate_seedings(n: usize) -> Result<impl Iterator<Item = Seeding>> {
    enumerate_seedings_with_guard(n, SEEDING_GUARD)
}

pub fn enumerate_seedings_with_guard(
    n: usize,
    max_n: usize,
) -> Result<impl Iterator<Item = Seeding>> {
    if !n.is_power_of_two() {
        return Err(Error::Precondition(format!("n={n} is not a power of two")));
    }
    if n > max_n {
        return Err(Error::GuardExceeded(format!(
            "seeding enumeration limited to n <= {max_n}, got {n}"
        )));
    }
    let players: Vec<Player> = (0..n).collect();
    Ok(canonical_brackets(&players)
        .into_iter()
        .map(|order| Seeding::new(order).expect("canonical bracket is a permutation")))
}

/// First enumerated seeding that crowns the favorite.
pub fn brute_force_decide(t: &Tournament) -> Result<Option<Seeding>> {
    Ok(enumerate_seedings(t.n())?.find(|s| simulate(t, s).champion() == t.vstar()))
}

/// Per-round niceness of a bracket.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NicenessReport {
    pub per_round: Vec<bool>,
    pub all_nice: bool,
}

/// Round `r` is nice when it knocks out an in-neighbor of the favorite or
/// none was left going into it.
pub fn niceness(t: &Tournament, trace: &KnockoutTrace) -> NicenessReport {
    let per_round: Vec<bool> = (1..=trace.num_rounds())
        .map(|r| {
            trace.losers(r).iter().any(|&p| t.is_in_neighbor(p))
                || !trace.survivors(r - 1).iter().any(|&p| t.is_in_neighbor(p))
        })
        .collect();
    let all_nice = per_round.iter().all(|&b| b);
    NicenessReport {
        per_round,
        all_nice,
    }
}

/// In-neighbors of the favorite still alive after round `r`.
pub fn in_neighbors_alive_after(t: &Tournament, trace: &KnockoutTrace, r: usize) -> Vec<Player> {
    trace
        .survivors(r.min(trace.num_rounds()))
        .iter()
        .copied()
        .filter(|&p| t.is_in_neighbor(p))
        .collect()
}

/// Turns a winning seeding into a nice winning seeding.
pub fn repair_to_nice(t: &Tournament, s: &Seeding) -> Result<Seeding> {
    repair_to_nice_counted(t, s).map(|(s, _)| s)
}

/// [`repair_to_nice`] plus the number of repair steps taken.
///
/// Each step takes the last non-nice round `p`, lifts the players it
/// eliminated into a sub-bracket of their own, shifts every later round one
/// round earlier alongside that sub-bracket, and ends with the favorite
/// beating the sub-bracket winner.
pub fn repair_to_nice_counted(t: &Tournament, s: &Seeding) -> Result<(Seeding, usize)> {
    let vstar = t.vstar();
    let total = t.rounds();
    if simulate(t, s).champion() != vstar {
        return Err(Error::Precondition(
            "seeding does not crown the favorite".into(),
        ));
    }
    let mut current = s.clone();
    let mut steps = 0;
    loop {
        let trace = simulate(t, &current);
        let report = niceness(t, &trace);
        let Some(p) = report
            .per_round
            .iter()
            .rposition(|&nice| !nice)
            .map(|i| i + 1)
        else {
            return Ok((current, steps));
        };
        if steps >= total {
            return Err(Error::Internal(
                "repair did not converge within log n steps".into(),
            ));
        }
        let eliminated = trace.losers(p).to_vec();
        let sub = simulate_subset(t, &eliminated)?;
        let w = sub.champion();
        if !t.beats(vstar, w) {
            return Err(Error::Internal(format!(
                "favorite cannot beat sub-bracket winner {w}"
            )));
        }
        let rounds = trace.rounds();
        let mut seq: MatchSets = rounds[..p - 1].to_vec();
        for (later, extra) in rounds[p..].iter().zip(sub.rounds()) {
            let mut merged = later.clone();
            merged.extend_from_slice(extra);
            seq.push(merged);
        }
        seq.push(vec![Match::new(vstar, w)]);
        current = seeding_from_sequence(t, &seq)?;
        steps += 1;
    }
}

/// The size-`2^k` binomial arborescence around in-neighbor `b` inside a
/// spanning winning arborescence: climb from `b` to the first vertex whose
/// subtree has at least `2^k` vertices and keep that vertex together with
/// its `k` smallest child subtrees.
pub fn extract_local_lba(t: &Tournament, full: &Lba, b: Player) -> Result<Lba> {
    let k = t.k();
    if full.len() != t.n() || full.root() != t.vstar() || !is_lba(t, full) {
        return Err(Error::Precondition(
            "expected a spanning arborescence rooted at the favorite".into(),
        ));
    }
    if b >= t.n() || !t.is_in_neighbor(b) {
        return Err(Error::Precondition(format!(
            "{b} does not beat the favorite"
        )));
    }
    if k >= t.rounds() {
        return Err(Error::Precondition(
            "local extraction needs k < log n".into(),
        ));
    }
    let view = full.tree_view().expect("is_lba implies a tree");
    let target = 1usize << k;
    let mut u = b;
    while view.size[&u] < target {
        u = full
            .parent_of(u)
            .ok_or_else(|| Error::Internal("walked past the root".into()))?;
    }
    let mut parent = BTreeMap::new();
    let mut stack: Vec<Player> = view.children[&u].iter().take(k).copied().collect();
    while let Some(x) = stack.pop() {
        parent.insert(x, full.parent_of(x).unwrap());
        stack.extend(&view.children[&x]);
    }
    let local = Lba::from_parents(u, parent);
    if !local.contains(b) {
        return Err(Error::Precondition(format!(
            "{b} lies outside the local arborescence at {u}; the bracket is not nice"
        )));
    }
    Ok(local)
}

/// Checks every winning-witness forest condition: exactly `k` pairwise
/// disjoint binomial arborescences of size `2^k`, each rooted at the
/// favorite or a player it beats, jointly covering all in-neighbors, with
/// the favorite appearing only as a root.
pub fn is_wwf(t: &Tournament, trees: &[Lba]) -> bool {
    let k = t.k();
    if trees.len() != k {
        return false;
    }
    let size = 1usize << k;
    let vstar = t.vstar();
    let mut seen = BTreeSet::new();
    for tree in trees {
        if tree.len() != size || !is_lba(t, tree) {
            return false;
        }
        let root = tree.root();
        if root != vstar && !t.beats(vstar, root) {
            return false;
        }
        if tree.contains(vstar) && root != vstar {
            return false;
        }
        for v in tree.vertices() {
            if !seen.insert(v) {
                return false;
            }
        }
    }
    t.in_neighbors().iter().all(|b| seen.contains(b))
}

/// Exhaustive search for a winning-witness forest.
pub fn brute_force_wwf(t: &Tournament) -> Result<Option<Wwf>> {
    let k = t.k();
    let n = t.n();
    if n > WWF_GUARD {
        return Err(Error::GuardExceeded(format!(
            "forest enumeration limited to n <= {WWF_GUARD}, got {n}"
        )));
    }
    if !forest_size(k).is_some_and(|s| s < n) {
        return Err(Error::GuardExceeded(format!(
            "forest enumeration needs k*2^k < n (k={k}, n={n})"
        )));
    }
    let mut trees = Vec::with_capacity(k);
    let mut used = vec![false; n];
    if !search_forest(t, &mut trees, &mut used)? {
        return Ok(None);
    }
    let free: Vec<Player> = (0..n).filter(|&v| !used[v]).collect();
    let block = 1usize << k;
    for chunk in free.chunks(block).take(k - trees.len()) {
        trees.push(arbitrary_lba(t, chunk)?);
    }
    let trees_ok = is_wwf(t, &trees);
    if !trees_ok {
        return Err(Error::Internal(
            "brute-force forest failed validation".into(),
        ));
    }
    Ok(Some(Wwf::from_trees(trees)))
}

/// Covers the lowest uncovered in-neighbor with every possible block,
/// recursing until all are covered or `k` trees are spent.
fn search_forest(t: &Tournament, trees: &mut Vec<Lba>, used: &mut [bool]) -> Result<bool> {
    let k = t.k();
    let Some(b) = t.in_neighbors().into_iter().find(|&b| !used[b]) else {
        return Ok(true);
    };
    if trees.len() == k {
        return Ok(false);
    }
    let vstar = t.vstar();
    let others: Vec<Player> = (0..t.n()).filter(|&v| v != b && !used[v]).collect();
    for partners in combinations(&others, (1usize << k) - 1) {
        let mut block = vec![b];
        block.extend(&partners);
        block.sort_unstable();
        let wanted = |root: Player| {
            if block.contains(&vstar) {
                root == vstar
            } else {
                t.beats(vstar, root)
            }
        };
        let Some(leaves) = canonical_brackets(&block)
            .into_iter()
            .find(|order| wanted(play_bracket(t, order).1))
        else {
            continue;
        };
        let (rounds, root) = play_bracket(t, &leaves);
        let parent = rounds
            .iter()
            .flatten()
            .map(|m| (m.loser, m.winner))
            .collect();
        trees.push(Lba::from_parents(root, parent));
        for &v in &block {
            used[v] = true;
        }
        if search_forest(t, trees, used)? {
            return Ok(true);
        }
        for &v in &block {
            used[v] = false;
        }
        trees.pop();
    }
    Ok(false)
}
