//! Library half of the `chessboard` command: the verification catalog and
//! the resource guard shared by the subcommands.

pub mod verify;

use chessboard_core::invariants::work_estimate;
use chessboard_core::MonomialIdeal;

/// Largest predicted multidegree work accepted without `--allow-long`.
pub const GUARD_LIMIT: u128 = 1 << 20;

/// `Err` with the predicted work when the ideal is over the guard limit.
pub fn guard(ideal: &MonomialIdeal, allow_long: bool) -> Result<u128, u128> {
    let work = work_estimate(ideal);
    if work > GUARD_LIMIT && !allow_long {
        Err(work)
    } else {
        Ok(work)
    }
}
