#include "cardzkp/printing.hpp"

namespace cardzkp {

PrintOutcome print_template(Table& t, Stack template_cards, AreaHandle& area,
                            const PrintingOptions& opts) {
  const int p = area.rows;
  const int q = area.cols;
  if (static_cast<int>(template_cards.size()) != p * q)
    throw std::invalid_argument("template size does not match area");

  for (int idx = 0; idx < p * q; ++idx) {
    const int r = idx / q;
    const int c = idx % q;
    Card template_card = template_cards[static_cast<std::size_t>(idx)];
    if (template_card.orientation != Orientation::kFaceDown)
      throw std::logic_error("template cards must be face-down");

    Stack& cell = area.cell(r, c);
    if (cell.size() != 1) throw std::logic_error("area cell must hold exactly one card");
    Card area_card = cell.front();
    cell.clear();

    // The two-card stack becomes a sequence of two: template card first,
    // area card second.
    PileMatrix pair = t.make_pile(1, 2);
    pair.at(0).push_back(template_card);
    pair.at(1).push_back(area_card);

    // The prover selects a blank card; when both are blank the policy
    // decides, and when neither is (a cheat got this far) the reveal will
    // expose it either way.
    int secret;
    if (template_card.face.is_blank() && area_card.face.is_blank())
      secret = opts.blank_policy == BlankPolicy::kPreferTemplate ? 0 : 1;
    else if (template_card.face.is_blank())
      secret = 0;
    else if (area_card.face.is_blank())
      secret = 1;
    else
      secret = 1;

    ChosenCutOptions cut_opts;
    if (opts.malformed_helper_at_cell == idx) cut_opts.malformed_helper = true;
    if (opts.cut_counter) {
      if (*opts.cut_counter == opts.malformed_helper_at_cut) cut_opts.malformed_helper = true;
      ++*opts.cut_counter;
    }

    auto cut = ChosenCutSession::open(t, pair, secret, cut_opts);
    if (!cut.ok()) return PrintOutcome::kMalformedHelper;

    if (opts.force_blank_reveals) cut.force_top_face_at_offset(0, CardFace::blank());
    CardFace shown = cut.reveal_top_at_offset(0);
    if (!shown.is_blank()) return PrintOutcome::kOverlap;
    cut.remove_top_at_offset(0);

    if (!cut.close()) return PrintOutcome::kMalformedHelper;

    // Exactly one of the two slots survived; it is the cell's card now.
    Stack survivor;
    for (int s = 0; s < 2; ++s)
      if (!pair.at(s).empty()) {
        if (!survivor.empty()) throw std::logic_error("two survivors in printing stack");
        survivor = std::move(pair.at(s));
      }
    if (survivor.size() != 1) throw std::logic_error("printing lost the survivor");
    area.cell(r, c) = std::move(survivor);
  }
  return PrintOutcome::kSuccess;
}

}  // namespace cardzkp
