//! Text, JSON and DOT front end over `sedenion-core`, plus the bundled
//! golden tables and the verification suite.

pub mod dot;
pub mod fixtures;
pub mod render;
pub mod verify;
