//! A local model of the Bruhat-Tits building of `PGL₃(Q₂)`.

mod chambers;
mod lattice;
mod ops;
mod transitivity;

pub use chambers::{chamber_report, Chamber, ChamberReport};
pub use lattice::{hermite_vertex, vertex_of_columns, vertex_of_matrix, Vertex};
pub use ops::{act, act_retry, ball, label, label_cocycle, neighbors};
pub use transitivity::{
    generator_words, generator_words_match, invert_word, letter_search, neighbor_words,
    transitivity_certificate, Filter, FilterReport, LetterSearch, Letters, TransitivityReport,
    Word,
};
