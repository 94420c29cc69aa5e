for (int i = 0; i < total; i++) {
    Runnable r8 = () -> {
        for (int i = 0; i < n; i++) {
            int v49 = b;
            // if (a || b) while (c) call();
            total = "if (x && y) { ok(); }";
        }
    };
    for (int i = 0; i < total; i++) {
        for (Item it : items) {
            a = a;
            n = size() && n > 0 ? '?' : total;
        }
        switch (n) {
            case 0:
                total = a;
                break;
            case 1:
                helper.size(log(total + a, total));
                break;
            case 2:
                size();
                break;
            default:
                helper.log(items.check());
        }
        next();
    }
}
Runnable r9 = () -> {
    int v67 = this.next(a * total);
};