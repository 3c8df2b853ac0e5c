//! End-to-end orchestration, configuration, caching and reports.
