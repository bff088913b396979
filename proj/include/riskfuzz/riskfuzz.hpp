#pragma once

#include "riskfuzz/analysis/kendall.hpp"
#include "riskfuzz/error.hpp"
#include "riskfuzz/fuzzy/config_json.hpp"
#include "riskfuzz/fuzzy/engine.hpp"
#include "riskfuzz/fuzzy/linguistic_variable.hpp"
#include "riskfuzz/fuzzy/rule_base.hpp"
#include "riskfuzz/fuzzy/trapezoid.hpp"
#include "riskfuzz/mcdm/decision_matrix.hpp"
#include "riskfuzz/mcdm/fuzzy_topsis.hpp"
#include "riskfuzz/mcdm/io.hpp"
#include "riskfuzz/mcdm/methods.hpp"
#include "riskfuzz/mcdm/ranking.hpp"
#include "riskfuzz/model/aggregation.hpp"
#include "riskfuzz/model/distributions.hpp"
#include "riskfuzz/model/questionnaire.hpp"
#include "riskfuzz/model/questionnaire_io.hpp"
#include "riskfuzz/model/risk_registry.hpp"
#include "riskfuzz/model/synthetic.hpp"
#include "riskfuzz/pipeline.hpp"
#include "riskfuzz/render/risk_matrix.hpp"
#include "riskfuzz/render/svg.hpp"
#include "riskfuzz/weighting/topsis_weights.hpp"
