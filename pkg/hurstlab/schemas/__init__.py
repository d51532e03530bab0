"""JSON schemas for hurstlab output files."""
