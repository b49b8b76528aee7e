#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

#include "esakia/error.hpp"
#include "esakia/kripke.hpp"

namespace esakia {

namespace {

// Postfix program over truth sets, evaluated once per valuation.
struct Instruction {
  Formula::Kind op;
  std::size_t atom = 0;
};

void compile(const Formula& f, const std::vector<std::string>& names, std::vector<Instruction>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      const auto it = std::lower_bound(names.begin(), names.end(), f.name());
      out.push_back({Formula::Kind::Atom, static_cast<std::size_t>(it - names.begin())});
      return;
    }
    case Formula::Kind::Bottom: out.push_back({Formula::Kind::Bottom}); return;
    default:
      compile(f.left(), names, out);
      compile(f.right(), names, out);
      out.push_back({f.kind()});
  }
}

PointSet run(const std::vector<Instruction>& program, const std::vector<PointSet>& valuation,
             const std::vector<PointSet>& up, std::vector<PointSet>& stack) {
  stack.clear();
  for (const auto& ins : program) {
    switch (ins.op) {
      case Formula::Kind::Atom: stack.push_back(valuation[ins.atom]); break;
      case Formula::Kind::Bottom: stack.push_back(0); break;
      default: {
        const PointSet r = stack.back();
        stack.pop_back();
        PointSet& l = stack.back();
        if (ins.op == Formula::Kind::And) {
          l &= r;
        } else if (ins.op == Formula::Kind::Or) {
          l |= r;
        } else {
          PointSet out = 0;
          for (std::size_t w = 0; w < up.size(); ++w)
            if ((up[w] & l & ~r) == 0) out |= PointSet{1} << w;
          l = out;
        }
      }
    }
  }
  return stack.back();
}

const std::vector<FinitePoset>& frames_of_size(std::size_t n) {
  static std::mutex lock;
  static std::map<std::size_t, std::vector<FinitePoset>> cache;
  std::lock_guard guard(lock);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_posets(n)).first;
  return it->second;
}

}  // namespace

std::optional<Countermodel> countermodel_search(const Formula& f, std::size_t max_worlds) {
  if (max_worlds == 0) throw Error(ErrorKind::InvalidInput, "countermodel search needs at least one world");
  if (max_worlds > 7) throw Error(ErrorKind::InvalidInput, "countermodel search is limited to 7 worlds");
  const std::vector<std::string> names = atoms(f);
  std::vector<Instruction> program;
  compile(f, names, program);
  std::vector<PointSet> stack;

  for (std::size_t n = 1; n <= max_worlds; ++n) {
    for (const auto& frame : frames_of_size(n)) {
      std::vector<PointSet> up(n);
      for (std::size_t w = 0; w < n; ++w) up[w] = frame.up(w);
      const std::vector<PointSet> choices = up_sets(frame);
      const PointSet all = frame.all();

      // Mixed-radix counter over one up-set per atom, last atom fastest.
      std::vector<std::size_t> digit(names.size(), 0);
      std::vector<PointSet> valuation(names.size(), choices[0]);
      while (true) {
        const PointSet truth = run(program, valuation, up, stack);
        if (truth != all) {
          const auto world = static_cast<std::size_t>(std::countr_zero(all & ~truth));
          return Countermodel{KripkeModel(frame, names, valuation), world};
        }
        std::size_t i = names.size();
        while (i > 0 && ++digit[i - 1] == choices.size()) {
          digit[i - 1] = 0;
          valuation[i - 1] = choices[0];
          --i;
        }
        if (i == 0) break;
        valuation[i - 1] = choices[digit[i - 1]];
      }
    }
  }
  return std::nullopt;
}

}  // namespace esakia
