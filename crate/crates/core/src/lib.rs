pub mod bits;
pub mod boolfun;
pub mod codes;
pub mod error;
pub mod funlib;
pub mod gf2m;
pub mod opoly;
pub mod diffsets;
pub mod verify;
pub mod cli;
