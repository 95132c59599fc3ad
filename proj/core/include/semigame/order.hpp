#pragma once

namespace semigame {

// Which player's variable the inner sum/integral runs over
// (x = player 1 / row, y = player 2 / column).
enum class SumOrder { x_inner, y_inner };

}  // namespace semigame
