"""Configuration: section models, layered settings, discovery and logging."""
