//! Enumeration caps, overridable through the environment.
//!
//! The library enumerates elements, subgroups and subcategories
//! exhaustively; the caps keep that cost explicit. Each cap can be raised
//! (or lowered) with an environment variable of the same name.

use std::env;

/// Element-enumeration cap (`MODCAT_MAX_ORDER`, default `10^6`).
pub fn max_order() -> u64 {
    read("MODCAT_MAX_ORDER", 1_000_000)
}

/// Subgroup-enumeration cap on `|G|` (`MODCAT_MAX_SUBGROUP_ORDER`, default `2^12`).
pub fn max_subgroup_order() -> u64 {
    read("MODCAT_MAX_SUBGROUP_ORDER", 1 << 12)
}

/// Subcategory-enumeration cap on the rank (`MODCAT_MAX_RANK`, default 64).
pub fn max_rank() -> u64 {
    read("MODCAT_MAX_RANK", 64)
}

/// Cap on the rank of constructed fusion rings (`MODCAT_MAX_RING_RANK`, default 512).
pub fn max_ring_rank() -> u64 {
    read("MODCAT_MAX_RING_RANK", 512)
}

fn read(name: &str, default: u64) -> u64 {
    match env::var(name) {
        Ok(v) => v.parse().unwrap_or(default),
        Err(_) => default,
    }
}
