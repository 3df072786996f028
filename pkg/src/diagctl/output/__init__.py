"""Output: rich renderers per operation plus JSON and CSV formatters."""
