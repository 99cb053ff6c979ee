pub mod analyze;
pub mod experiment;
pub mod export;
pub mod gen;
pub mod verify;

/// Oracle size caps, overridable through the environment.
pub fn clique_limit() -> usize {
    env_limit(
        "COMPARABILITY_CLIQUE_LIMIT",
        comparability_core::analysis::DEFAULT_CLIQUE_VERTEX_LIMIT,
    )
}

pub fn biclique_limit() -> usize {
    env_limit(
        "COMPARABILITY_BICLIQUE_LIMIT",
        comparability_core::analysis::DEFAULT_BICLIQUE_VERTEX_LIMIT,
    )
}

fn env_limit(var: &str, default: usize) -> usize {
    std::env::var(var)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(default)
}
