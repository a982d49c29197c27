#pragma once

#include <array>
#include <string_view>

namespace veer {

enum class CorpusGroup { BelowMu4, Mu4, Betti2Midpoint, Betti2Fallback, Betti3 };

struct CorpusEntry {
    CorpusGroup group;
    std::string_view sig;
    int index;  // census number when known, else -1
};

inline constexpr std::array<CorpusEntry, 34> kCorpus{{
    {CorpusGroup::BelowMu4, "cPcbbbiht_12", -1},
    {CorpusGroup::BelowMu4, "cPcbbbdxm_10", -1},
    {CorpusGroup::BelowMu4, "dLQbccchhfo_122", -1},
    {CorpusGroup::BelowMu4, "dLQbccchhsj_122", -1},
    {CorpusGroup::BelowMu4, "dLQacccjsnk_200", -1},
    {CorpusGroup::BelowMu4, "eLMkbcdddhhhml_1221", -1},
    {CorpusGroup::BelowMu4, "eLMkbcdddhhhdu_1221", -1},
    {CorpusGroup::BelowMu4, "eLPkaccddjnkaj_2002", -1},
    {CorpusGroup::BelowMu4, "eLPkbcdddhrrcv_1200", -1},
    {CorpusGroup::BelowMu4, "eLMkbcdddhhqqa_1220", -1},
    {CorpusGroup::BelowMu4, "eLMkbcdddhhqxh_1220", -1},
    {CorpusGroup::BelowMu4, "fLMPcbcdeeehhhhkn_12211", -1},
    {CorpusGroup::BelowMu4, "fLMPcbcdeeehhhhvc_12211", -1},
    {CorpusGroup::Mu4, "eLMkbcdddhxqdu_1200", -1},
    {CorpusGroup::Mu4, "eLMkbcdddhxqlm_1200", -1},
    {CorpusGroup::Mu4, "fLLQcbeddeehhnkhh_21112", -1},
    {CorpusGroup::Mu4, "gLMzQbcdefffhhhhhit_122112", -1},
    {CorpusGroup::Mu4, "gLMzQbcdefffhhhhhpe_122112", -1},
    {CorpusGroup::Betti2Midpoint, "fLLQcbeddeehhbghh_01110", -1},
    {CorpusGroup::Betti2Fallback, "pLLLPwLLMQQcegeehjmkonoomnnqhqxqvqcsqpqqsta_022210001222100", -1},
    {CorpusGroup::Betti2Fallback, "pLLvLAMPPAQbefgikjjimlnnoooxxhvcqrfrhfjrmla_211120020212120", -1},
    {CorpusGroup::Betti2Fallback, "qLLLLwzMAAQkacfighlkmkkopnpopjkglwlfvbjkduajrc_2002121012100202", -1},
    {CorpusGroup::Betti2Fallback, "qLLLLzLQwMQkbegfjlimkionnnoppxxmxxmwhdsephterr_1022101100112222", -1},
    {CorpusGroup::Betti2Fallback, "qLLvAALzQzQkbeghfilkmlnmnpopphhxagbqqqokbjqagb_0111022020111020", -1},
    {CorpusGroup::Betti2Fallback, "qLLvLMvzQQQkbdjgjminpkloopmopdwbwbagpadbssrjos_2101022222110001", -1},
    {CorpusGroup::Betti2Fallback, "qLLvMLzzAQQkbefgjkionmplnmnpphhqqaqfhxbawvbnha_0111022001111210", -1},
    {CorpusGroup::Betti2Fallback, "qLLvzzwPPQQkcdekjnokljmpnnopphshepahphegbgbvnn_1222011112220200", -1},
    {CorpusGroup::Betti3, "ovLLLLPMQQceeekjmlimmnnllnfssfjhhshhhahhh_20110222222110", 21390},
    {CorpusGroup::Betti3, "ovLLLMPPPQccdjfghlijnmnlmnnkqxnkavkaxhhcc_12020111111202", 21444},
    {CorpusGroup::Betti3, "pvLLLMPzPQQcdjfghlinonolmonnkqxnkavhaxhhccv_120201111112002", 42251},
    {CorpusGroup::Betti3, "qLLvLQwLQPMkbefgigilnkmnnopppxxxgbrglheabnphwr_1022101010011222", 66862},
    {CorpusGroup::Betti3, "qLvvAMQvAQPkbhighhkjmnolmppophharrwarqqbbraxgh_2111220020111110", 80635},
    {CorpusGroup::Betti3, "qvLvvLPAQQQkekjinlolnpmpmopongiwwvwaoflflfipmo_2100100211112211", 86454},
    {CorpusGroup::Betti3, "qvvLPAMzMQMkfhfghjlmlononmpppqhqxaxaqhaqqhhxha_2100122222210102", 86954},
}};

}  // namespace veer
