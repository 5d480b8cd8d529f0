//! The out-degree parameterized solver.
//!
//! The champion wins `log n` matches, so a favorite that beats fewer than
//! `log n` players cannot win. Otherwise `n <= 2^ℓ` and the exact solver is
//! within the parameter budget.

use crate::arborescence::lba_to_seeding;
use crate::embed::solve_exact;
use crate::error::Result;
use crate::indeg::verify_winning;
use crate::tournament::{Seeding, Tournament};

/// True when the favorite has too few wins available to take the title.
pub fn outdeg_rejects(t: &Tournament) -> bool {
    t.ell() < t.rounds()
}

pub fn solve_outdeg(t: &Tournament) -> Result<Option<Seeding>> {
    if outdeg_rejects(t) {
        return Ok(None);
    }
    let Some(lba) = solve_exact(t)? else {
        return Ok(None);
    };
    let s = lba_to_seeding(&lba)?;
    verify_winning(t, &s)?;
    Ok(Some(s))
}
