//! Bilingual English/French surface realizer.
//!
//! Trees of terminals (`N`, `V`, `A`, ...) and phrases (`S`, `NP`, `VP`, ...)
//! are built with a language-stamped [`syntax::Builder`] and realized by an
//! [`Engine`] holding both lexicons:
//!
//! ```
//! use birealize::{Engine, features::Tense};
//!
//! let mut engine = Engine::with_fixtures();
//! let b = engine.load_en();
//! let s = b.s([
//!     b.np([b.d("the"), b.n("cat"), b.a("small")]),
//!     b.vp([
//!         b.v("jump").t(Tense::Past),
//!         b.pp([b.p("on"), b.np([b.d("the"), b.n("mat"), b.a("green")])]),
//!     ]),
//! ]);
//! assert_eq!(engine.realize(&s).text, "The small cat jumped on the green mat.");
//! ```

pub mod drill;
pub mod engine;
pub mod features;
pub mod interchange;
pub mod lexicon;
pub mod morphology;
pub mod realizer;
pub mod report;
pub mod syntax;

pub use engine::Engine;
pub use realizer::{Realization, Warning, WarningCode};
