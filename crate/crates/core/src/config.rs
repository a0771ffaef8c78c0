//! Resource caps, overridable through environment variables.

pub const RING_SIZE_ENV: &str = "IDEALTOP_RING_SIZE_CAP";
pub const IDEAL_CAP_ENV: &str = "IDEALTOP_IDEAL_CAP";
pub const CLOSED_SET_CAP_ENV: &str = "IDEALTOP_CLOSED_SET_CAP";

pub const DEFAULT_RING_SIZE_CAP: usize = 1 << 16;
pub const DEFAULT_IDEAL_CAP: usize = 1 << 16;
pub const DEFAULT_CLOSED_SET_CAP: usize = 1 << 20;

fn read(var: &str, default: usize) -> usize {
    std::env::var(var)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(default)
}

pub fn ring_size_cap() -> usize {
    read(RING_SIZE_ENV, DEFAULT_RING_SIZE_CAP)
}

pub fn ideal_cap() -> usize {
    read(IDEAL_CAP_ENV, DEFAULT_IDEAL_CAP)
}

pub fn closed_set_cap() -> usize {
    read(CLOSED_SET_CAP_ENV, DEFAULT_CLOSED_SET_CAP)
}
