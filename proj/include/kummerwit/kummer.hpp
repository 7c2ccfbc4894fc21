#pragma once
// Local behaviour of degree-l Kummer steps K(b^(1/l))/K at one place, and a
// valuation-descent simulator for the radical towers built over K.
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kummerwit/place.hpp"

namespace kummerwit {

enum class KummerCase { TotallyRamified, InertDegreeL, Split };
std::string to_string(KummerCase c);
// Local norm group of the step, in words.
std::string norm_group_description(KummerCase c);

// b must be nonzero and not an l-th power in K; l prime with l | q - 1.
KummerCase kummer_case(const RatFunc& b, const Place& P, u64 ell);
bool is_global_lth_power(const RatFunc& b, u64 ell);

struct StepRecord {
  std::string label;
  KummerCase kcase;
  u64 e, f;
};

// Local data at one place above P, shared by all places above P at this
// level. Residues are unit-part residues relative to the current uniformizer
// and always lie in the residue field of P.
struct PlaceState {
  Place base;
  u64 Q0;       // residue size at P
  u64 f_total;  // residue degree over P; Q = Q0^f_total
  u64 e_total;
  u64 places;   // number of places above P at this level
  std::map<std::string, i64> vals;
  std::map<std::string, Poly> residues;
  std::vector<StepRecord> history;

  // Residue size of the current place; InvalidArgument when it exceeds 64 bits.
  u64 Q() const;
};

PlaceState make_state(const Place& P, const std::map<std::string, RatFunc>& tracked);
// Is the tracked residue r an l-th power in the current residue field.
bool residue_is_lth_power(const PlaceState& st, const Poly& r, u64 ell);
PlaceState descend(const PlaceState& st, const std::string& b_label, u64 ell);

enum class Section3Lemma { Ncong1, Congruentes1, Ncong2, Congruentes2 };
std::string to_string(Section3Lemma w);
Section3Lemma parse_lemma(const std::string& s);

struct LemmaVerdict {
  std::vector<std::pair<std::string, bool>> hypotheses;
  bool hypotheses_hold;
  bool conclusion_holds;
  std::vector<std::pair<std::string, bool>> conclusions;
  std::optional<PlaceState> terminal;
};

// inputs: {x, b, c} for the L lemmas, {x, d, a} for the H lemmas.
LemmaVerdict verify_section3_lemma(Section3Lemma which, const std::map<std::string, RatFunc>& inputs, u64 ell,
                                   const Place& P);

struct SLocal {
  bool theta;
  bool b_margin;
};
SLocal s_local_conditions(const RatFunc& c, const RatFunc& x, const RatFunc& d, u64 ell, const std::vector<Place>& S);

}  // namespace kummerwit
