//! The in-degree parameterized solver.
//!
//! With `k` players beating the favorite and `k·2^k < n`, the favorite can
//! win exactly when there is a winning-witness forest: `k` disjoint binomial
//! arborescences of size `2^k` that swallow every in-neighbor and are rooted
//! at the favorite or at players it beats. Such a forest is found by color
//! coding. In-neighbors get fixed distinct colors, everyone else a random
//! color from a palette of `k·2^k − k`, and a colorful copy of the forest is
//! searched for, with a synthetic source `d` standing in for a common root.
//! The forest is then padded with arbitrary blocks and merged pairwise into a
//! full bracket.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arborescence::{arbitrary_lba, is_lba, lba_to_seeding, merge_lbas, uba_shape, Lba};
use crate::embed::{solve_exact, ColorfulEmbedder, Coloring, HostGraph, PatternTree};
use crate::error::{Error, Result};
use crate::oracles::is_wwf;
use crate::tournament::{simulate, Player, Seeding, Tournament};

/// Widest DP the color-coding path will attempt (`k·2^k + 1` colors).
const MAX_FOREST_COLORS: usize = crate::embed::DEFAULT_MAX_COLORS;

/// A winning-witness forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wwf {
    trees: Vec<Lba>,
}

impl Wwf {
    /// Wraps trees without checking them; see [`is_wwf`].
    pub fn from_trees(trees: Vec<Lba>) -> Self {
        Self { trees }
    }

    pub fn trees(&self) -> &[Lba] {
        &self.trees
    }

    pub fn roots(&self) -> Vec<Player> {
        self.trees.iter().map(Lba::root).collect()
    }

    /// Union of the vertex sets, ascending.
    pub fn vertices(&self) -> Vec<Player> {
        let set: BTreeSet<Player> = self.trees.iter().flat_map(Lba::vertices).collect();
        set.into_iter().collect()
    }

    pub fn into_trees(self) -> Vec<Lba> {
        self.trees
    }
}

/// Knobs for the randomized search.
#[derive(Debug, Clone, PartialEq)]
pub struct IndegConfig {
    pub rng_seed: u64,
    /// Scales the base budget of `⌈e^t⌉` colorings.
    pub iteration_multiplier: f64,
    pub max_iterations_override: Option<u64>,
}

impl Default for IndegConfig {
    fn default() -> Self {
        Self {
            rng_seed: 0,
            iteration_multiplier: 1.0,
            max_iterations_override: None,
        }
    }
}

impl IndegConfig {
    pub fn new(rng_seed: u64, iteration_multiplier: f64) -> Self {
        Self {
            rng_seed,
            iteration_multiplier,
            ..Self::default()
        }
    }

    pub fn check(&self) -> Result<()> {
        if !(self.iteration_multiplier.is_finite() && self.iteration_multiplier > 0.0) {
            return Err(Error::Precondition(format!(
                "iteration multiplier must be positive, got {}",
                self.iteration_multiplier
            )));
        }
        Ok(())
    }

    /// `⌈multiplier · e^t⌉` with `t = k·2^k − k`, unless overridden.
    pub fn iteration_budget(&self, k: usize) -> u64 {
        if let Some(n) = self.max_iterations_override {
            return n;
        }
        let t = forest_size(k).map_or(f64::INFINITY, |s| (s - k) as f64);
        let budget = (self.iteration_multiplier * t.exp()).ceil();
        if budget >= u64::MAX as f64 {
            u64::MAX
        } else {
            (budget as u64).max(1)
        }
    }
}

/// `k·2^k`, or `None` on overflow.
pub fn forest_size(k: usize) -> Option<usize> {
    1usize.checked_shl(k as u32).and_then(|p| p.checked_mul(k))
}

fn uses_color_coding(t: &Tournament) -> bool {
    forest_size(t.k()).is_some_and(|s| s < t.n())
}

/// Random coloring of the players: the `i`-th in-neighbor (ascending id)
/// gets color `i`; everyone else draws uniformly from `k+1..=k·2^k`.
pub fn sample_coloring<R: Rng + ?Sized>(t: &Tournament, rng: &mut R) -> Coloring {
    let k = t.k();
    assert!(k >= 1, "coloring needs at least one in-neighbor");
    let top = forest_size(k).expect("palette size overflows") as u32;
    let mut next_fixed = 0u32;
    let colors = (0..t.n())
        .map(|v| {
            if t.is_in_neighbor(v) {
                next_fixed += 1;
                next_fixed
            } else {
                rng.random_range(k as u32 + 1..=top)
            }
        })
        .collect();
    Coloring::new(colors).expect("colors start at 1")
}

/// `k` copies of the order-`k` binomial tree under a fresh root `f`.
///
/// Node `0` is `f`; copy `i` occupies nodes `1 + i·2^k ..` in the canonical
/// binomial numbering.
pub fn build_pattern_forest(k: usize) -> (PatternTree, usize) {
    assert!(k >= 1, "pattern forest needs k >= 1");
    let shape = uba_shape(k as u32);
    let block = shape.len();
    let mut parent = Vec::with_capacity(k * block + 1);
    parent.push(None);
    for i in 0..k {
        let offset = 1 + i * block;
        parent.extend(
            shape
                .parents()
                .into_iter()
                .map(|p| Some(p.map_or(0, |p| p + offset))),
        );
    }
    let pattern = PatternTree::from_parents(parent).expect("forest pattern is a tree");
    (pattern, 0)
}

/// The tournament with arcs into the favorite removed, plus a source `d`
/// (vertex `n`) pointing at the favorite and every player it beats.
pub fn build_host(t: &Tournament) -> (HostGraph, usize) {
    let n = t.n();
    let d = n;
    let mut host = HostGraph::new(n + 1);
    for u in 0..n {
        for v in 0..n {
            if t.beats(u, v) && v != t.vstar() {
                host.add_arc(u, v).expect("no self-loops in a tournament");
            }
        }
    }
    host.add_arc(d, t.vstar()).expect("d is fresh");
    for v in t.out_neighbors() {
        host.add_arc(d, v).expect("d is fresh");
    }
    (host, d)
}

/// Appends `d` (which must be the next vertex id) with color `k·2^k + 1`.
pub fn extend_coloring(c: &Coloring, d: usize, k: usize) -> Coloring {
    assert_eq!(
        d,
        c.len(),
        "d must be the vertex appended after the players"
    );
    let color = forest_size(k).expect("palette size overflows") + 1;
    c.extended(color as u32)
}

fn iteration_rng(seed: u64, iter: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(iter);
    rng
}

/// Looks for a winning-witness forest by repeated random colorings.
///
/// Iterations are independent and may run in parallel; the lowest
/// successful iteration index decides the result, so output depends only
/// on the configuration. Absence means no colorful forest was hit.
pub fn find_wwf(t: &Tournament, cfg: &IndegConfig) -> Result<Option<Wwf>> {
    cfg.check()?;
    let k = t.k();
    if k == 0 || !uses_color_coding(t) {
        return Err(Error::Precondition(format!(
            "color coding needs 1 <= k and k*2^k < n (k={k}, n={})",
            t.n()
        )));
    }
    let width = forest_size(k).unwrap() + 1;
    if width > MAX_FOREST_COLORS {
        return Err(Error::WidthExceeded {
            colors: width,
            limit: MAX_FOREST_COLORS,
        });
    }
    let (pattern, f) = build_pattern_forest(k);
    let (host, d) = build_host(t);
    let embedder = ColorfulEmbedder::new(&pattern, &host, f, d)?.with_max_colors(width);
    let budget = cfg.iteration_budget(k);

    let found = (0..budget).into_par_iter().find_map_first(|iter| {
        let mut rng = iteration_rng(cfg.rng_seed, iter);
        let c = sample_coloring(t, &mut rng);
        let cc = extend_coloring(&c, d, k);
        match embedder.find(&cc) {
            Ok(None) => None,
            other => Some(other),
        }
    });
    let Some(emb) = found.transpose()?.flatten() else {
        return Ok(None);
    };

    let block = 1usize << k;
    let shape = uba_shape(k as u32);
    let trees: Vec<Lba> = (0..k)
        .map(|i| {
            let offset = 1 + i * block;
            let parent = (1..block)
                .map(|x| {
                    (
                        emb.image(offset + x),
                        emb.image(offset + shape.parent(x).unwrap()),
                    )
                })
                .collect();
            Lba::from_parents(emb.image(offset), parent)
        })
        .collect();
    if !is_wwf(t, &trees) {
        return Err(Error::Internal(
            "embedded forest is not a winning-witness forest".into(),
        ));
    }
    Ok(Some(Wwf::from_trees(trees)))
}

/// Grows a winning-witness forest into a bracket the favorite wins.
///
/// Leftover players are cut into `2^k` blocks in ascending id order, each
/// block is played out arbitrarily, and the trees are merged pairwise in
/// list order (forest first, then blocks) until one remains.
pub fn complete_wwf(t: &Tournament, w: &Wwf) -> Result<Lba> {
    let k = t.k();
    if !uses_color_coding(t) {
        return Err(Error::Precondition("completion needs k*2^k < n".into()));
    }
    if !is_wwf(t, w.trees()) {
        return Err(Error::Precondition("not a winning-witness forest".into()));
    }
    let block = 1usize << k;
    let used: BTreeSet<Player> = w.vertices().into_iter().collect();
    let rest: Vec<Player> = (0..t.n()).filter(|v| !used.contains(v)).collect();
    let mut trees: Vec<Lba> = w.trees().to_vec();
    for chunk in rest.chunks(block) {
        trees.push(arbitrary_lba(t, chunk)?);
    }

    let vstar = t.vstar();
    loop {
        let roots_ok = trees
            .iter()
            .all(|l| l.root() == vstar || t.beats(vstar, l.root()));
        let at_vstar = trees.iter().filter(|l| l.root() == vstar).count();
        if !roots_ok || at_vstar != 1 {
            return Err(Error::Internal(format!(
                "merge round with {} trees: roots outside the favorite's reach or {at_vstar} rooted at it",
                trees.len()
            )));
        }
        if trees.len() == 1 {
            break;
        }
        trees = trees
            .chunks_exact(2)
            .map(|pair| merge_lbas(t, &pair[0], &pair[1]))
            .collect::<Result<_>>()?;
    }
    let full = trees.pop().unwrap();
    if full.root() != vstar || full.len() != t.n() || !is_lba(t, &full) {
        return Err(Error::Internal(
            "completed arborescence is not a winning bracket".into(),
        ));
    }
    Ok(full)
}

/// Which branch [`solve_indeg_traced`] took.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndegRoute {
    /// Nobody beats the favorite.
    Trivial,
    /// `k·2^k >= n`: handed to the exact solver.
    Exact,
    /// Color coding ran.
    ColorCoding,
}

/// Decides via the in-degree algorithm; returns a verified winning seeding.
pub fn solve_indeg(t: &Tournament, cfg: &IndegConfig) -> Result<Option<Seeding>> {
    solve_indeg_traced(t, cfg).map(|(s, _)| s)
}

pub fn solve_indeg_traced(
    t: &Tournament,
    cfg: &IndegConfig,
) -> Result<(Option<Seeding>, IndegRoute)> {
    cfg.check()?;
    let (seeding, route) = if t.k() == 0 {
        (Some(Seeding::identity(t.n())?), IndegRoute::Trivial)
    } else if !uses_color_coding(t) {
        let s = solve_exact(t)?.map(|l| lba_to_seeding(&l)).transpose()?;
        (s, IndegRoute::Exact)
    } else {
        let s = match find_wwf(t, cfg)? {
            Some(w) => Some(lba_to_seeding(&complete_wwf(t, &w)?)?),
            None => None,
        };
        (s, IndegRoute::ColorCoding)
    };
    if let Some(s) = &seeding {
        verify_winning(t, s)?;
    }
    Ok((seeding, route))
}

pub(crate) fn verify_winning(t: &Tournament, s: &Seeding) -> Result<()> {
    if simulate(t, s).champion() != t.vstar() {
        return Err(Error::Internal(format!(
            "seeding [{s}] does not crown the favorite"
        )));
    }
    Ok(())
}
