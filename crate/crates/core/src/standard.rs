//! Named shadows used throughout the crate.

use crate::codes::parse_mapcode;
use crate::shadow::Shadow;

/// Map code of the trefoil projection in canonical labeling.
pub const TREFOIL_MAPCODE: &str = "shadow v=3 alpha=0-4,1-7,2-8,3-11,5-10,6-9";

/// Map code of the one-crossing projection in canonical labeling.
pub const FIGURE_EIGHT_MAPCODE: &str = "shadow v=1 alpha=0-3,1-2";

pub fn trivial() -> Shadow {
    Shadow::trivial()
}

pub fn figure_eight() -> Shadow {
    parse_mapcode(FIGURE_EIGHT_MAPCODE).expect("fixture parses")
}

pub fn trefoil() -> Shadow {
    parse_mapcode(TREFOIL_MAPCODE).expect("fixture parses")
}
