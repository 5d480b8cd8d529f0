//! Algorithm selection shared by the command line and the tests.

use std::fmt;
use std::str::FromStr;

use crate::arborescence::lba_to_seeding;
use crate::embed::solve_exact;
use crate::error::{Error, Result};
use crate::indeg::{forest_size, solve_indeg_traced, verify_winning, IndegConfig, IndegRoute};
use crate::oracles::brute_force_decide;
use crate::outdeg::{outdeg_rejects, solve_outdeg};
use crate::tournament::{Seeding, Tournament};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Algo {
    /// Trivial yes, out-degree reject, exact or color coding, whichever applies first.
    #[default]
    Auto,
    Exact,
    Brute,
    Indeg,
    Outdeg,
}

impl FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Algo::Auto),
            "exact" => Ok(Algo::Exact),
            "brute" => Ok(Algo::Brute),
            "indeg" => Ok(Algo::Indeg),
            "outdeg" => Ok(Algo::Outdeg),
            other => Err(Error::Precondition(format!("unknown algorithm {other:?}"))),
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algo::Auto => "auto",
            Algo::Exact => "exact",
            Algo::Brute => "brute",
            Algo::Indeg => "indeg",
            Algo::Outdeg => "outdeg",
        })
    }
}

/// The code path that produced an answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Nobody beats the favorite.
    Trivial,
    /// Fewer wins available than rounds to play.
    OutdegReject,
    Exact,
    ColorCoding,
    Brute,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Trivial => "trivial",
            Route::OutdegReject => "outdeg-reject",
            Route::Exact => "exact",
            Route::ColorCoding => "color-coding",
            Route::Brute => "brute",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub seeding: Option<Seeding>,
    pub algo: Algo,
    pub route: Route,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        self.seeding.is_some()
    }
}

/// Runs `algo` on `t`. Any returned seeding has been replayed and crowns
/// the favorite.
pub fn decide(t: &Tournament, algo: Algo, cfg: &IndegConfig) -> Result<Decision> {
    let (seeding, route) = match algo {
        Algo::Auto => {
            if t.k() == 0 {
                (Some(Seeding::identity(t.n())?), Route::Trivial)
            } else if outdeg_rejects(t) {
                (None, Route::OutdegReject)
            } else if forest_size(t.k()).map_or(true, |s| s >= t.n()) {
                (exact_seeding(t)?, Route::Exact)
            } else {
                let (s, _) = solve_indeg_traced(t, cfg)?;
                (s, Route::ColorCoding)
            }
        }
        Algo::Exact => (exact_seeding(t)?, Route::Exact),
        Algo::Brute => (brute_force_decide(t)?, Route::Brute),
        Algo::Outdeg => {
            let route = if outdeg_rejects(t) {
                Route::OutdegReject
            } else {
                Route::Exact
            };
            (solve_outdeg(t)?, route)
        }
        Algo::Indeg => {
            let (s, r) = solve_indeg_traced(t, cfg)?;
            let route = match r {
                IndegRoute::Trivial => Route::Trivial,
                IndegRoute::Exact => Route::Exact,
                IndegRoute::ColorCoding => Route::ColorCoding,
            };
            (s, route)
        }
    };
    if let Some(s) = &seeding {
        verify_winning(t, s)?;
    }
    Ok(Decision {
        seeding,
        algo,
        route,
    })
}

fn exact_seeding(t: &Tournament) -> Result<Option<Seeding>> {
    solve_exact(t)?.map(|l| lba_to_seeding(&l)).transpose()
}
