"""Pure group-theoretic computation: groups, fields, widths, characters, geometry."""
