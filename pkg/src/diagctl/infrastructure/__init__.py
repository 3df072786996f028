"""Infrastructure: the per-invocation workspace, worker pool, group cache and table files."""
