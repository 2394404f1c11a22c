//! Placeholder; the staged search is assembled here.
