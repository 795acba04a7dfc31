// Copyright 2026 The Semfields Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

// Exception tables for irregular English inflection.

#include <optional>
#include <string_view>
#include <unordered_map>

namespace semfields::morphology {

struct FormBase {
  std::string_view form;
  std::string_view base;
};

// Past tense and past participle forms of irregular verbs, plus the
// inflected forms of "be", "have", "do" and "go".
inline constexpr FormBase kIrregularVerbs[] = {
    {"am", "be"}, {"is", "be"}, {"are", "be"}, {"was", "be"}, {"were", "be"}, {"been", "be"},
    {"being", "be"}, {"'m", "be"}, {"'re", "be"}, {"has", "have"}, {"had", "have"}, {"'ve", "have"},
    {"does", "do"}, {"did", "do"}, {"done", "do"}, {"goes", "go"}, {"went", "go"}, {"gone", "go"},
    {"arose", "arise"}, {"arisen", "arise"}, {"awoke", "awake"}, {"borne", "bear"},
    {"beat", "beat"}, {"beaten", "beat"}, {"became", "become"}, {"began", "begin"}, {"begun", "begin"},
    {"bent", "bend"}, {"bet", "bet"}, {"bit", "bite"}, {"bitten", "bite"}, {"bled", "bleed"},
    {"blew", "blow"}, {"blown", "blow"}, {"broke", "break"}, {"broken", "break"}, {"bred", "breed"},
    {"brought", "bring"}, {"built", "build"}, {"burnt", "burn"}, {"bought", "buy"}, {"caught", "catch"},
    {"chose", "choose"}, {"chosen", "choose"}, {"clung", "cling"}, {"came", "come"}, {"crept", "creep"},
    {"dealt", "deal"}, {"dug", "dig"}, {"drew", "draw"}, {"drawn", "draw"}, {"dreamt", "dream"},
    {"drank", "drink"}, {"drunk", "drink"}, {"drove", "drive"}, {"driven", "drive"}, {"ate", "eat"},
    {"eaten", "eat"}, {"fell", "fall"}, {"fallen", "fall"}, {"fed", "feed"}, {"felt", "feel"},
    {"fought", "fight"}, {"found", "find"}, {"fled", "flee"}, {"flung", "fling"}, {"flew", "fly"},
    {"flown", "fly"}, {"forbade", "forbid"}, {"forgot", "forget"}, {"forgotten", "forget"},
    {"forgave", "forgive"}, {"forgiven", "forgive"}, {"froze", "freeze"}, {"frozen", "freeze"},
    {"got", "get"}, {"gotten", "get"}, {"gave", "give"}, {"given", "give"}, {"ground", "grind"},
    {"grew", "grow"}, {"grown", "grow"}, {"hung", "hang"}, {"heard", "hear"}, {"hid", "hide"},
    {"hidden", "hide"}, {"held", "hold"}, {"kept", "keep"}, {"knelt", "kneel"}, {"knew", "know"},
    {"known", "know"}, {"laid", "lay"}, {"led", "lead"}, {"leapt", "leap"}, {"learnt", "learn"},
    {"left", "leave"}, {"lent", "lend"}, {"lain", "lie"}, {"lit", "light"},
    {"lost", "lose"}, {"made", "make"}, {"meant", "mean"}, {"met", "meet"}, {"paid", "pay"},
    {"proved", "prove"}, {"quit", "quit"}, {"ran", "run"}, {"rang", "ring"}, {"rung", "ring"},
    {"rode", "ride"}, {"ridden", "ride"}, {"rose", "rise"}, {"risen", "rise"}, {"said", "say"},
    {"sang", "sing"}, {"sung", "sing"}, {"sank", "sink"}, {"sunk", "sink"}, {"sat", "sit"},
    {"saw", "see"}, {"seen", "see"}, {"sought", "seek"}, {"sold", "sell"}, {"sent", "send"},
    {"shook", "shake"}, {"shaken", "shake"}, {"shone", "shine"}, {"shot", "shoot"}, {"shrank", "shrink"},
    {"slept", "sleep"}, {"slid", "slide"}, {"slung", "sling"}, {"spoke", "speak"}, {"spoken", "speak"},
    {"sped", "speed"}, {"spent", "spend"}, {"spun", "spin"}, {"spat", "spit"}, {"split", "split"},
    {"spread", "spread"}, {"sprang", "spring"}, {"sprung", "spring"}, {"stood", "stand"},
    {"stole", "steal"}, {"stolen", "steal"}, {"stuck", "stick"}, {"stung", "sting"}, {"stank", "stink"},
    {"struck", "strike"}, {"strove", "strive"}, {"swore", "swear"}, {"sworn", "swear"},
    {"swept", "sweep"}, {"swam", "swim"}, {"swum", "swim"}, {"swung", "swing"}, {"took", "take"},
    {"taken", "take"}, {"taught", "teach"}, {"tore", "tear"}, {"torn", "tear"}, {"told", "tell"},
    {"thought", "think"}, {"threw", "throw"}, {"thrown", "throw"}, {"understood", "understand"},
    {"woke", "wake"}, {"woken", "wake"}, {"wore", "wear"}, {"worn", "wear"}, {"wove", "weave"},
    {"woven", "weave"}, {"wept", "weep"}, {"won", "win"}, {"wound", "wind"}, {"wrote", "write"},
    {"written", "write"}, {"ca", "can"}, {"wo", "will"}, {"'ll", "will"}, {"'d", "would"},
    {"n't", "not"}, {"dove", "dive"}, {"overcame", "overcome"}, {"undertook", "undertake"},
    {"withdrew", "withdraw"}, {"mistook", "mistake"}, {"mistaken", "mistake"}, {"bound", "bind"},
    {"fit", "fit"}, {"slew", "slay"}, {"smelt", "smell"}, {"spelt", "spell"}, {"spilt", "spill"},
    {"dwelt", "dwell"}, {"knit", "knit"},
};

inline constexpr FormBase kIrregularNouns[] = {
    {"men", "man"},         {"women", "woman"},   {"children", "child"}, {"feet", "foot"},
    {"teeth", "tooth"},     {"geese", "goose"},   {"mice", "mouse"},     {"oxen", "ox"},
    {"lives", "life"},      {"wives", "wife"},    {"knives", "knife"},   {"leaves", "leaf"},
    {"loaves", "loaf"},     {"wolves", "wolf"},   {"halves", "half"},    {"shelves", "shelf"},
    {"thieves", "thief"},   {"calves", "calf"},   {"selves", "self"},    {"proceeds", "proceeds"},
    {"news", "news"},       {"people", "people"}, {"series", "series"},  {"species", "species"},
    {"glasses", "glasses"}, {"scissors", "scissors"}, {"pants", "pants"}, {"trousers", "trousers"},
    {"clothes", "clothes"}, {"means", "means"},   {"dice", "die"},       {"cattle", "cattle"},
    {"sheep", "sheep"},     {"fish", "fish"},     {"deer", "deer"},      {"data", "data"},
    {"criteria", "criterion"}, {"potatoes", "potato"}, {"tomatoes", "tomato"}, {"heroes", "hero"},
};

inline const std::unordered_map<std::string_view, std::string_view>& verb_table() {
  static const std::unordered_map<std::string_view, std::string_view> table = [] {
    std::unordered_map<std::string_view, std::string_view> t;
    for (const auto& fb : kIrregularVerbs) t.emplace(fb.form, fb.base);
    return t;
  }();
  return table;
}

inline const std::unordered_map<std::string_view, std::string_view>& noun_table() {
  static const std::unordered_map<std::string_view, std::string_view> table = [] {
    std::unordered_map<std::string_view, std::string_view> t;
    for (const auto& fb : kIrregularNouns) t.emplace(fb.form, fb.base);
    return t;
  }();
  return table;
}

inline std::optional<std::string_view> irregular_verb_base(std::string_view form) {
  auto it = verb_table().find(form);
  if (it == verb_table().end()) return std::nullopt;
  return it->second;
}

inline std::optional<std::string_view> irregular_noun_base(std::string_view form) {
  auto it = noun_table().find(form);
  if (it == noun_table().end()) return std::nullopt;
  return it->second;
}

}  // namespace semfields::morphology
