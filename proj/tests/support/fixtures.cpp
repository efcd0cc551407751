#include "fixtures.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace fixtures {

namespace {

struct Row {
  std::string word;
  std::string pos;
  std::string bit;
};

std::vector<std::string> lex(const std::string& text) {
  std::vector<std::string> out;
  std::string atom;
  auto flush = [&] {
    if (!atom.empty()) out.push_back(atom);
    atom.clear();
  };
  for (char c : text) {
    if (c == '(' || c == ')') {
      flush();
      out.emplace_back(1, c);
    } else if (c == ' ' || c == '\n' || c == '\t') {
      flush();
    } else {
      atom += c;
    }
  }
  flush();
  return out;
}

std::vector<Row> rows_of(const std::string& tree) {
  const auto t = lex(tree);
  std::vector<Row> rows;
  std::string pending;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == "(") {
      const std::string& label = t.at(i + 1);
      if (t.at(i + 2) != "(") {
        rows.push_back({t[i + 2], label, pending + "*"});
        pending.clear();
        if (t.at(i + 3) != ")") throw std::logic_error("bad preterminal in " + tree);
        i += 3;
      } else {
        pending += "(" + label;
        i += 1;
      }
    } else if (t[i] == ")") {
      rows.back().bit += ")";
    } else {
      throw std::logic_error("bare atom in " + tree);
    }
  }
  return rows;
}

std::vector<std::string> coref_fields(std::size_t n, const std::vector<MentionSpec>& mentions) {
  std::vector<std::string> out(n);
  for (std::size_t t = 0; t < n; ++t) {
    const int i = static_cast<int>(t);
    std::vector<MentionSpec> closes, singles, opens;
    for (const MentionSpec& m : mentions) {
      if (m.start == i && m.end == i) singles.push_back(m);
      else if (m.end == i) closes.push_back(m);
      else if (m.start == i) opens.push_back(m);
    }
    std::sort(closes.begin(), closes.end(), [](auto& a, auto& b) { return a.start > b.start; });
    std::sort(opens.begin(), opens.end(), [](auto& a, auto& b) { return a.end > b.end; });
    std::vector<std::string> items;
    for (auto& m : closes) items.push_back(std::to_string(m.entity) + ")");
    for (auto& m : singles) items.push_back("(" + std::to_string(m.entity) + ")");
    for (auto& m : opens) items.push_back("(" + std::to_string(m.entity));
    std::string field;
    for (std::size_t k = 0; k < items.size(); ++k) field += (k ? "|" : "") + items[k];
    out[t] = field.empty() ? "-" : field;
  }
  return out;
}

}  // namespace

std::string conll_text(const std::vector<DocSpec>& docs) {
  std::ostringstream out;
  for (const DocSpec& doc : docs) {
    char part[8];
    std::snprintf(part, sizeof(part), "%03d", doc.part);
    out << "#begin document (" << doc.doc_id << "); part " << part << '\n';
    for (std::size_t s = 0; s < doc.trees.size(); ++s) {
      const auto rows = rows_of(doc.trees[s]);
      std::vector<MentionSpec> here;
      for (const MentionSpec& m : doc.mentions) {
        if (m.sentence == static_cast<int>(s)) here.push_back(m);
      }
      const auto coref = coref_fields(rows.size(), here);
      for (std::size_t t = 0; t < rows.size(); ++t) {
        out << doc.doc_id << ' ' << doc.part << ' ' << t << ' ' << rows[t].word << ' '
            << rows[t].pos << ' ' << rows[t].bit << " - - - Speaker#1 * " << coref[t] << '\n';
      }
      out << '\n';
    }
    out << "#end document\n";
  }
  return out.str();
}

std::vector<minspan::Document> read(const std::string& text) {
  std::istringstream in(text);
  return minspan::read_conll(in);
}

std::vector<minspan::Document> documents(const std::vector<DocSpec>& docs) {
  return read(conll_text(docs));
}

DocSpec presence_key() {
  return {"presence", 0, {kPresenceGold, kThatPresence}, {{0, 4, 6, 1}, {1, 0, 1, 1}}};
}

DocSpec presence_sys() {
  return {"presence", 0, {kPresenceSystem, kThatPresence}, {{0, 4, 12, 1}, {1, 0, 1, 1}}};
}

std::vector<NoisePair> noise_pairs() {
  std::vector<NoisePair> pairs;
  auto add = [&](std::string name, std::string tree, std::string follow, MentionSpec key,
                 MentionSpec sys) {
    DocSpec k{name, 0, {tree, follow}, {key, {1, 0, 0, key.entity}}};
    DocSpec s{name, 0, {tree, follow}, {sys, {1, 0, 0, sys.entity}}};
    pairs.push_back({name, k, s, key, sys});
  };
  const std::string it_is = "(TOP (S (NP (PRP It)) (VP (VBZ is) (ADJP (JJ old))) (. .)))";

  // Le0 Courrier1 du2 Sud3 ,4 published5 by6 Quebecor7 Media8 ,9 is10 the11 oldest12 .13
  add("comma",
      "(TOP (S (NP (NP (NNP Le) (NNP Courrier) (NNP du) (NNP Sud)) (, ,)"
      " (VP (VBN published) (PP (IN by) (NP (NNP Quebecor) (NNP Media)))) (, ,))"
      " (VP (VBZ is) (NP (DT the) (JJS oldest))) (. .)))",
      it_is, {0, 0, 3, 1}, {0, 0, 4, 1});

  // They0 renamed1 FIRA2 to3 ``4 Investment5 Canada6 ''7 .8
  add("quotes",
      "(TOP (S (NP (PRP They)) (VP (VBD renamed) (NP (NNP FIRA))"
      " (PP (TO to) (NP (`` ``) (NP (NNP Investment) (NNP Canada)) ('' '')))) (. .)))",
      it_is, {0, 4, 7, 1}, {0, 5, 6, 1});

  // In0 2007 1 ,2 Pierce3 College4 sheltered5 and6 fed7 more8 than9 150 10 horses11 .12
  add("appended",
      "(TOP (S (PP (IN In) (NP (CD 2007))) (, ,) (NP (NNP Pierce) (NNP College))"
      " (VP (VP (VBD sheltered)) (CC and) (VP (VBD fed)"
      " (NP (QP (JJR more) (IN than) (CD 150)) (NNS horses)))) (. .)))",
      it_is, {0, 3, 4, 1}, {0, 3, 5, 1});

  // Canada0 has1 ties2 with3 the4 Netherlands5 ,6 owing7 ,8 in9 part10 ,11 to12 history13 .14
  add("appositive",
      "(TOP (S (NP (NNP Canada)) (VP (VBZ has) (NP (NP (NNS ties)) (PP (IN with)"
      " (NP (NP (DT the) (NNP Netherlands)) (, ,) (VP (VBG owing)) (, ,))))"
      " (PP (IN in) (NP (NN part))) (, ,) (PP (TO to) (NP (NN history)))) (. .)))",
      it_is, {0, 4, 5, 1}, {0, 4, 8, 1});
  return pairs;
}

DocSpec conjunction_doc() {
  // They0 left1 .2
  const std::string they = "(TOP (S (NP (PRP They)) (VP (VBD left)) (. .)))";
  const std::string names = std::string("(TOP (S ") + kConjunction +
                            " (VP (VBD testified)) (. .)))";
  return {"conjunction",
          0,
          {kJohnAndMary, they, names},
          {{0, 0, 2, 1},
           {0, 0, 0, 2},
           {0, 2, 2, 3},
           {1, 0, 0, 1},
           {2, 0, 8, 4},
           {2, 0, 3, 5},
           {2, 4, 5, 6},
           {2, 7, 8, 7}}};
}

DocSpec containment_doc() {
  return {"containment", 0, {kManyCompanies, kAttendants}, {{0, 0, 7, 1}, {1, 0, 6, 2}}};
}

minspan::MinAnnotations containment_annotations() {
  minspan::MinAnnotations a;
  a.add({"containment", 0, 0, {0, 7}, {0, 0}});
  a.add({"containment", 0, 1, {0, 6}, {6, 6}});
  return a;
}

}  // namespace fixtures
