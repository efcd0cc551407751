#pragma once

#include <string>
#include <vector>

#include "minspan/conll.hpp"
#include "minspan/sidecar.hpp"

namespace fixtures {

// Golden trees with POS preterminals. Token indices in comments.
inline constexpr const char* kCopy =  // a0 copy1 of2 the3 statement4 from5 the6 newspapers7
    "(NP (NP (DT a) (NN copy)) (PP (IN of) (NP (DT the) (NN statement)))"
    " (PP (IN from) (NP (DT the) (NNS newspapers))))";

inline constexpr const char* kNestedZone =  // Shantou0 's1 new2 high3 level4 technology5 development6 zone7
    "(NP (NP (NNP Shantou) (POS 's)) (JJ new)"
    " (NML (NML (NML (JJ high) (NN level)) (NN technology)) (NN development)) (NN zone))";

inline constexpr const char* kAppositive =  // a0 man1 named2 Cornelius3 a4 Roman5 army6 officer7 in8 the9 Italian10 unit11
    "(NP (NP (NP (DT a) (NN man)) (VP (VBN named) (NP (NNP Cornelius))))"
    " (NP (NP (DT a) (JJ Roman) (NN army) (NN officer))"
    " (PP (IN in) (NP (DT the) (JJ Italian) (NN unit)))))";

inline constexpr const char* kConjunction =  // Joran0 Van1 Der2 Sloot3 Deepak4 Kalpoe5 and6 Satish7 Kalpoe8
    "(NP (NP (NNP Joran) (NNP Van) (NNP Der) (NNP Sloot)) (NP (NNP Deepak) (NNP Kalpoe))"
    " (CC and) (NP (NNP Satish) (NNP Kalpoe)))";

// This0 News1 Corp.2 has3 an4 extensive5 presence6 ,7 of8 course9 in10 this11 country12 .13
inline constexpr const char* kPresenceGold =
    "(TOP (S (NP (DT This) (NNP News) (NNP Corp.))"
    " (VP (VBZ has) (NP (NP (DT an) (JJ extensive) (NN presence))) (, ,)"
    " (PP (IN of) (NP (NN course))) (PP (IN in) (NP (DT this) (NN country)))) (. .)))";

inline constexpr const char* kPresenceSystem =
    "(TOP (S (NP (DT This) (NNP News) (NNP Corp.))"
    " (VP (VBZ has) (NP (NP (NP (DT an) (JJ extensive) (NN presence)) (, ,)"
    " (PP (IN of) (NP (NN course)))) (PP (IN in) (NP (DT this) (NN country))))) (. .)))";

// That0 presence1 may2 be3 expanding4 soon5 .6
inline constexpr const char* kThatPresence =
    "(TOP (S (NP (DT That) (NN presence)) (VP (MD may) (VP (VB be)"
    " (VP (VBG expanding) (ADVP (RB soon))))) (. .)))";

inline constexpr const char* kOurs = "(ADJP (JJ ours))";

// many0 big1 oil2 ,3 chemical4 and5 airline6 companies7 rose8 .9
inline constexpr const char* kManyCompanies =
    "(TOP (S (NP (JJ many) (JJ big) (UCP (NN oil) (, ,) (NN chemical) (CC and) (NN airline))"
    " (NNS companies)) (VP (VBD rose)) (. .)))";

// American0 's1 more2 than3 10000 4 flight5 attendants6
inline constexpr const char* kAttendants =
    "(TOP (S (NP (NNP American)) (VP (VBZ 's) (NP (QP (JJR more) (IN than) (CD 10000))"
    " (NN flight) (NNS attendants)))))";

// John0 and1 Mary2 arrived3 .4
inline constexpr const char* kJohnAndMary =
    "(TOP (S (NP (NP (NNP John)) (CC and) (NP (NNP Mary))) (VP (VBD arrived)) (. .)))";

struct MentionSpec {
  int sentence;
  int start;
  int end;
  int entity;
};

struct DocSpec {
  std::string doc_id;
  int part = 0;
  std::vector<std::string> trees;  // bracketed, with POS preterminals
  std::vector<MentionSpec> mentions;
};

// CoNLL-2012 text written without the library: parse bits and coreference
// fields are derived directly from the bracketed strings.
std::string conll_text(const std::vector<DocSpec>& docs);
std::vector<minspan::Document> read(const std::string& text);
std::vector<minspan::Document> documents(const std::vector<DocSpec>& docs);

// Example pair: gold chain {an extensive presence, That presence}; the
// system's first mention runs to "country".
DocSpec presence_key();
DocSpec presence_sys();

// Boundary-noise pairs, one injected mismatch each.
struct NoisePair {
  std::string name;
  DocSpec key;
  DocSpec sys;
  MentionSpec key_mention;
  MentionSpec sys_mention;
};
std::vector<NoisePair> noise_pairs();

// "John and Mary" as a mention plus each conjunct, and the large conjunction.
DocSpec conjunction_doc();

// Containment fixtures and their MIN annotations.
DocSpec containment_doc();
minspan::MinAnnotations containment_annotations();

}  // namespace fixtures
