if (config.state instanceof RuleStopState) {
    if (debug) {
        if (recog != null) {
            System.out.format("closure at \
", recog.getRuleNames()[config.state.ruleIndex], config);
        } else {
            System.out.format("closure at rule stop \
", config);
        }
    }
}
