//! Compiles the guide's examples as doctests, so the book and the crate
//! cannot drift apart.

#[doc = include_str!("../../../book/src/introduction.md")]
pub struct Introduction;

#[doc = include_str!("../../../book/src/dependent-disjunctions.md")]
pub struct DependentDisjunctions;

#[doc = include_str!("../../../book/src/alternatives-and-cases.md")]
pub struct AlternativesAndCases;

#[doc = include_str!("../../../book/src/independence-test.md")]
pub struct IndependenceTest;

#[doc = include_str!("../../../book/src/modularization.md")]
pub struct Modularization;

#[doc = include_str!("../../../book/src/oracle.md")]
pub struct Oracle;

#[doc = include_str!("../../../book/src/command-line.md")]
pub struct CommandLine;
