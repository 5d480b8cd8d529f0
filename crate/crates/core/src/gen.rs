//! Seeded instance generators. The favorite is always player 0.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arborescence::{lba_to_seeding, uba_shape, Lba};
use crate::error::{Error, Result};
use crate::tournament::{Player, Seeding, Tournament};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub n: usize,
    /// Number of players beating the favorite.
    pub k: usize,
    pub seed: u64,
    pub planted: bool,
}

impl GenSpec {
    pub fn random(n: usize, k: usize, seed: u64) -> Self {
        Self {
            n,
            k,
            seed,
            planted: false,
        }
    }

    pub fn planted(n: usize, k: usize, seed: u64) -> Self {
        Self {
            n,
            k,
            seed,
            planted: true,
        }
    }

    fn check(&self) -> Result<()> {
        if !self.n.is_power_of_two() {
            return Err(Error::Precondition(format!(
                "n={} is not a power of two",
                self.n
            )));
        }
        if self.k >= self.n {
            return Err(Error::Precondition(format!(
                "k={} must be below n={}",
                self.k, self.n
            )));
        }
        Ok(())
    }
}

/// A planted yes-instance and the bracket it was built around.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Planted {
    pub tournament: Tournament,
    pub witness: Seeding,
}

/// Exactly `k` random players beat the favorite; every other pair is a
/// fair coin flip.
pub fn gen_random(spec: &GenSpec) -> Result<Tournament> {
    spec.check()?;
    let n = spec.n;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut beats_vstar = vec![false; n];
    for i in index::sample(&mut rng, n - 1, spec.k) {
        beats_vstar[i + 1] = true;
    }
    Tournament::from_fn(n, 0, |u, v| {
        if u == 0 {
            !beats_vstar[v]
        } else {
            rng.random_bool(0.5)
        }
    })
}

/// A yes-instance with in-degree exactly `k`, built around a random
/// bracket the favorite wins.
pub fn gen_planted_yes(spec: &GenSpec) -> Result<Planted> {
    spec.check()?;
    let n = spec.n;
    let c = n.trailing_zeros() as usize;
    if spec.k + c > n - 1 {
        return Err(Error::Precondition(format!(
            "planted k={} exceeds n - 1 - log n = {}",
            spec.k,
            n - 1 - c
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let shape = uba_shape(c as u32);
    let mut labels: Vec<Player> = (0..n).collect();
    labels[1..].shuffle(&mut rng);

    // decided[u * n + v] = Some(true) iff u beats v.
    let mut decided: Vec<Option<bool>> = vec![None; n * n];
    let mut set = |u: Player, v: Player| {
        decided[u * n + v] = Some(true);
        decided[v * n + u] = Some(false);
    };
    let mut parent = std::collections::BTreeMap::new();
    for x in 1..n {
        let p = shape.parent(x).unwrap();
        set(labels[p], labels[x]);
        parent.insert(labels[x], labels[p]);
    }
    let opponents: Vec<Player> = shape.children(0).into_iter().map(|x| labels[x]).collect();
    let others: Vec<Player> = (1..n).filter(|p| !opponents.contains(p)).collect();
    let mut beats_vstar = vec![false; n];
    for i in index::sample(&mut rng, others.len(), spec.k) {
        beats_vstar[others[i]] = true;
    }
    for &p in &others {
        if beats_vstar[p] {
            set(p, 0);
        } else {
            set(0, p);
        }
    }
    let tournament = Tournament::from_fn(n, 0, |u, v| {
        decided[u * n + v].unwrap_or_else(|| rng.random_bool(0.5))
    })?;
    let witness = lba_to_seeding(&Lba::from_parents(0, parent))?;
    Ok(Planted {
        tournament,
        witness,
    })
}
